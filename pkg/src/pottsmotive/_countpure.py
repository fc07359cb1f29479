"""Pure-Python point-counting kernel.

Counts the common zeros of a system of integer polynomials over the prime
field F_p by specializing one variable at a time, outermost first.  A
polynomial is dense: a pair (shape, coeffs) where shape[i] is 1 + the degree
in variable i and coeffs is the flat row-major coefficient list (last
variable fastest, so flat index = e0*prod(shape[1:]) + ...).

Early exits keep the recursion far below p^nvars nodes in practice:
  - a polynomial that reduces to a nonzero constant kills its branch,
  - a polynomial that vanishes identically stops constraining the branch,
  - a single polynomial that is at most bilinear in the last two variables
    is finished off in closed form.

The compiled twin in _countcore.pyx mirrors this module; keep the two in
step when changing either.
"""


def count_common_zeros(polys, nvars, prime):
    """Number of points of F_p^nvars at which every polynomial vanishes."""
    active = []
    for shape, coeffs in polys:
        if len(shape) != nvars:
            raise ValueError("polynomial shape does not match the variable count")
        reduced = [c % prime for c in coeffs]
        if any(reduced):
            active.append((tuple(shape), reduced))
    if not active:
        return prime**nvars
    return _count(active, nvars, prime)


def _count(polys, nvars, prime):
    for _, coeffs in polys:
        if len(coeffs) == 1:
            return 0  # nonzero constant: this branch has no common zero
    if len(polys) == 1:
        shape, coeffs = polys[0]
        if nvars == 1:
            return _univariate_zeros(coeffs, prime)
        if nvars == 2 and shape[0] <= 2 and shape[1] <= 2:
            return _bilinear_zeros(shape, coeffs, prime)
    total = 0
    for v in range(prime):
        branch = []
        dead = False
        for shape, coeffs in polys:
            spec = _specialize(shape, coeffs, v, prime)
            if spec is None:
                continue  # vanished: no longer a constraint
            if len(spec[1]) == 1:
                dead = True  # specialized to a nonzero constant
                break
            branch.append(spec)
        if dead:
            continue
        if branch:
            total += _count(branch, nvars - 1, prime)
        else:
            total += prime ** (nvars - 1)
    return total


def _specialize(shape, coeffs, v, prime):
    """Set the first variable to v; None when the result is identically 0."""
    d0 = shape[0]
    rest = shape[1:]
    if d0 == 1:
        return (rest, coeffs)  # shared, read-only
    block = len(coeffs) // d0
    out = list(coeffs[(d0 - 1) * block : d0 * block])
    for i in range(d0 - 2, -1, -1):
        base = i * block
        for j in range(block):
            out[j] = (out[j] * v + coeffs[base + j]) % prime
    if any(out):
        return (rest, out)
    return None


def _univariate_zeros(coeffs, prime):
    top = len(coeffs) - 1
    count = 0
    for v in range(prime):
        acc = coeffs[top]
        for i in range(top - 1, -1, -1):
            acc = (acc * v + coeffs[i]) % prime
        if acc == 0:
            count += 1
    return count


def _bilinear_zeros(shape, coeffs, prime):
    """Zeros of c00 + c01*y + c10*x + c11*x*y over F_p^2, in O(1)."""
    s1 = shape[1]
    c00 = coeffs[0]
    c01 = coeffs[1] if s1 == 2 else 0
    if shape[0] == 2:
        c10 = coeffs[s1]
        c11 = coeffs[s1 + 1] if s1 == 2 else 0
    else:
        c10 = c11 = 0
    if c11:
        # y-coefficient vanishes at exactly one x; elsewhere one y each
        x0 = (-c01 * pow(c11, -1, prime)) % prime
        alpha = (c00 + c10 * x0) % prime
        return (prime - 1) + (prime if alpha == 0 else 0)
    if c01:
        return prime  # one y for every x
    if c10:
        return prime  # x is pinned, y free
    return 0  # nonzero constant (the all-zero case never reaches here)
