# main.py
import sys

from src import main

if __name__ == "__main__":
    sys.exit(main())
