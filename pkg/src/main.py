import sys

from vbfcodes import cli


def main():
    sys.exit(cli.main())


if __name__ == "__main__":
    main()
