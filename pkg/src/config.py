import os
from dotenv import load_dotenv

load_dotenv()


DEFAULT_SEED = int(os.getenv("FGSP6_SEED", "0"))
DEFAULT_TRIALS = int(os.getenv("FGSP6_TRIALS", "25"))
DEFAULT_TOLERANCE = float(os.getenv("FGSP6_TOL", "1e-9"))
NUMERIC_DPS = int(os.getenv("FGSP6_DPS", "30"))


QUARTIC_SAMPLES = int(os.getenv("FGSP6_QUARTIC_SAMPLES", "8"))
QUARTIC_CHECK = os.getenv("FGSP6_QUARTIC_CHECK", "complete").lower()
X_SEARCH_BOUND = int(os.getenv("FGSP6_X_SEARCH_BOUND", "3"))


LOG_LEVEL = os.getenv("FGSP6_LOG_LEVEL", "WARNING").upper()
LOG_FILE = os.getenv("FGSP6_LOG_FILE", "")
