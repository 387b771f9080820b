# Import necessary libraries
import os
import logging
import threading
from dotenv import load_dotenv

# Configure logging
logger = logging.getLogger(__name__)

class RuntimeSettings:
    """ Environment-derived runtime settings, read once and cached """

    # Class-level cache
    _threads = None
    _lock = threading.Lock()

    @classmethod
    def threadCap(cls) -> int:
        """
            Maximum number of concurrently running Monte Carlo shards.

            Reads QCORR_THREADS from the environment (or a .env file). Missing or
            invalid values fall back to 1.

            Returns:
                int: Positive thread cap
        """
        with cls._lock:
            if cls._threads is None:
                load_dotenv()
                raw = os.getenv("QCORR_THREADS")
                cls._threads = cls._parseThreads(raw)
            return cls._threads

    @classmethod
    def reset(cls) -> None:
        """ Drop the cached value so the next call re-reads the environment """
        with cls._lock:
            cls._threads = None

    @staticmethod
    def _parseThreads(raw) -> int:
        if raw is None or raw == "":
            return 1
        try:
            value = int(raw)
        except ValueError:
            logger.warning(f"Ignoring non-integer QCORR_THREADS={raw!r}")
            return 1
        if value < 1:
            logger.warning(f"Ignoring non-positive QCORR_THREADS={value}")
            return 1
        return value
