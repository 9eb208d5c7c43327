"""Independent routes used only by the tests."""

from itertools import accumulate


def series_from_numerator(numerator, length):
    """Coefficients of numerator(t) / (1 - t)^3 up to t^(length-1)."""
    coeffs = list(numerator) + [0] * max(0, length - len(numerator))
    for _ in range(3):
        coeffs = list(accumulate(coeffs))
    return coeffs[:length]


def resolution_numerator(degrees, theta):
    """1 - sum t^d_i + sum t^(theta - d_i) - t^theta as a coefficient list."""
    num = [0] * (theta + 1)
    num[0] += 1
    for d in degrees:
        num[d] -= 1
        num[theta - d] += 1
    num[theta] -= 1
    return num


def gorenstein_hf_by_series(degrees):
    m = (len(degrees) - 1) // 2
    theta = sum(degrees) // m
    vals = series_from_numerator(resolution_numerator(degrees, theta), theta + 2)
    while vals and vals[-1] == 0:
        vals.pop()
    return tuple(vals)
