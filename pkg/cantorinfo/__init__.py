"""cantorinfo - exact Cantor pairing, combinadics and information-efficiency calculus."""

__version__ = "0.1.0"
