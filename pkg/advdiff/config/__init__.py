from .config import COMMANDS, BoundarySpec, RunConfig

__all__ = ["COMMANDS", "BoundarySpec", "RunConfig"]
