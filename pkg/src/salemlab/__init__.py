"""salemlab: rigorous numerics for effective Salem-set constructions."""

__version__ = "0.1.0"

from .endpoints import EValue, Order, affine_image, compare, make_evalue, refine_interval

__all__ = [
    "EValue",
    "Order",
    "affine_image",
    "compare",
    "make_evalue",
    "refine_interval",
    "__version__",
]
