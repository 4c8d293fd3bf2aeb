# run.py
import sys
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Run the command line interface
if __name__ == "__main__":
    from cellres.cli import main
    sys.exit(main())
