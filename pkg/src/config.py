import os

from dotenv import load_dotenv

load_dotenv()


class Config:
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    SUBGROUP_ORDER_BOUND: int = int(os.getenv("SUBGROUP_ORDER_BOUND", "400"))
    AUTOMORPHISM_VERTEX_LIMIT: int = int(os.getenv("AUTOMORPHISM_VERTEX_LIMIT", "32"))
    ISOMORPHISM_ORACLE_ORDER_BOUND: int = int(os.getenv("ISOMORPHISM_ORACLE_ORDER_BOUND", "48"))

    RUN_CHECKS_CONCURRENTLY: bool = os.getenv("RUN_CHECKS_CONCURRENTLY", "true").lower() == "true"
    REPORT_SCHEMA_VERSION: str = os.getenv("REPORT_SCHEMA_VERSION", "1.0")
    DEFAULT_REPORT_FORMAT: str = os.getenv("DEFAULT_REPORT_FORMAT", "text")

config = Config()
