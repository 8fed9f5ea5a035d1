import logging
import os

from omegaconf import OmegaConf

DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "configs", "verify.yaml")


def create_logger(level="INFO"):
    """
    Create a logger that writes to stderr, keeping stdout for results.
    """
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format="[\033[34m%(asctime)s\033[0m] %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        handlers=[logging.StreamHandler()],
        force=True,
    )
    logger = logging.getLogger(__name__)
    return logger


def load_config(config_path=None, overrides=None):
    """Load the verify configuration and merge non-None overrides on top."""
    cfg = OmegaConf.load(config_path or DEFAULT_CONFIG)
    if overrides:
        cfg = OmegaConf.merge(cfg, OmegaConf.create({k: v for k, v in overrides.items() if v is not None}))
    return cfg
