"""Numeric rendering shared by reports and the command line."""

from __future__ import annotations

import numpy as np


def format_value(v) -> str:
    """Render one report value: booleans as true/false, integers bare,
    reals with nine digits after the decimal point."""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.9f}"
