"""Automatic discovery of combinatorial specifications for combinatorial sets.

The engine decomposes classes with domain-supplied strategies until the
accumulated rules contain a specification; transfer tools then turn a found
specification into counting sequences and generating-function systems. The
bundled domains are tilings (pattern-avoiding permutation classes) and
binary words avoiding factors.
"""

__version__ = "0.1.0"
