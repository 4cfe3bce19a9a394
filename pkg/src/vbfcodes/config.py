import os

# Defaults can be overridden from the environment; CLI flags override both.
LOG_LEVEL = os.getenv("VBF_LOG_LEVEL", "WARNING").upper()

# weight_distribution_enum refuses codes with more than 2^MAX_ENUM_DIM codewords
MAX_ENUM_DIM = int(os.getenv("VBF_MAX_ENUM_DIM", "26"))

# largest supported field degree m
MAX_DEGREE = int(os.getenv("VBF_MAX_DEGREE", "20"))
MIN_DEGREE = 2
