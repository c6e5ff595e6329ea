__version__ = "1.0"
__author__ = "Wiered"

import sys

from dotenv import load_dotenv

load_dotenv()

from src.commands import run

if __name__ == "__main__":
    sys.exit(run())
