"""Word formulas for the twist-knot family, in the word text format."""


def twist_relator_text(n: int) -> str:
    """Tunnel-disk boundary (XY)^(2n-1) X (yx)^(n+1) Y (XY)^(2n-1) (xy)^(n+1)."""
    return f"(XY)^{2 * n - 1}X(yx)^{n + 1}Y(XY)^{2 * n - 1}(xy)^{n + 1}"


def twist_longitude_text(n: int) -> str:
    """Longitude y (xy)^n (XY)^n X YY (XY)^n X (yx)^(n+1) x."""
    return f"y(xy)^{n}(XY)^{n}XYY(XY)^{n}X(yx)^{n + 1}x"


def twist_exponent_sum(n: int) -> int:
    """Exponent of each generator in the relator, counted from the formula."""
    return 3 - 2 * n
