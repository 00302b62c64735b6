"""pgatlas: finite p-groups that are central extensions of C_p^2 by a
minimal non-abelian group — construction, classification, verification."""

from .pcgroup import Element, GroupData, group_for

__all__ = ["GroupData", "Element", "group_for"]

__version__ = "0.1.0"
