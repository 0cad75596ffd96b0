import sys
from pathlib import Path

# Make the shared oracle helpers importable when tests run from anywhere.
sys.path.insert(0, str(Path(__file__).resolve().parent))
