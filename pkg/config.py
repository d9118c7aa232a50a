import os
import logging
from dotenv import load_dotenv

# Load environment variables from .env
load_dotenv()

class Config:
    SOLVER_BUDGET_SECONDS = float(os.getenv("SOLVER_BUDGET_SECONDS", "300"))
    PRODUCT_VERTEX_CEILING = int(os.getenv("PRODUCT_VERTEX_CEILING", "120"))
    RANDOM_SEED = int(os.getenv("RANDOM_SEED", "20240601"))
    RANDOM_PAIR_COUNT = int(os.getenv("RANDOM_PAIR_COUNT", "500"))
    RANDOM_GRAPH_COUNT = int(os.getenv("RANDOM_GRAPH_COUNT", "300"))
    THREADS = int(os.getenv("THREADS", "1"))
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()

    @staticmethod
    def validate():
        if Config.SOLVER_BUDGET_SECONDS <= 0:
            raise ValueError("SOLVER_BUDGET_SECONDS must be positive.")
        if Config.PRODUCT_VERTEX_CEILING < 1:
            raise ValueError("PRODUCT_VERTEX_CEILING must be at least 1.")
        if Config.THREADS < 1:
            raise ValueError("THREADS must be at least 1.")
        if Config.RANDOM_PAIR_COUNT < 0 or Config.RANDOM_GRAPH_COUNT < 0:
            raise ValueError("Random corpus sizes cannot be negative.")
        if not isinstance(logging.getLevelName(Config.LOG_LEVEL), int):
            raise ValueError(f"Unknown LOG_LEVEL: {Config.LOG_LEVEL}")

# Validate settings on import
Config.validate()
