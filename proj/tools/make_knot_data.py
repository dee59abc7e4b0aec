#!/usr/bin/env python3
"""Regenerate data/seeds.json, data/reference_polynomials.json and
data/aliases.json.

Source: the public KnotInfo tables as shipped by the `database_knotinfo`
package (pip install database_knotinfo). Prime seeds are KnotInfo's minimal
arc presentations, oriented by tracing the closed curve; composite seeds are
built with the same one-row merge as gridband::connect_sum and then
shrunk by commutations and destabilizations to the additive arc index.
Reference polynomials are copied from KnotInfo and multiplied out for the
composites, so they never pass through the C++ invariant code.

Aliases are the KnotInfo knots with 9 to 12 crossings whose Jones and
Alexander polynomials coincide with a table class; their grids let the
library check that its tie-breaking invariant separates them.

Jones polynomials are rewritten in the bracket variable A (t = A^-4); the
Alexander polynomials are symmetrized with value +1 at t = 1.
"""

import argparse
import json
import pathlib
import re

import sympy

PRIMES = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"] + \
    [f"7_{i}" for i in range(1, 8)] + [f"8_{i}" for i in range(1, 22)]

COMPOSITES = [
    ("3_1", "3_1"), ("3_1", "3_1m"), ("3_1", "4_1"), ("3_1", "5_1"),
    ("3_1", "5_1m"), ("3_1", "5_2"), ("3_1", "5_2m"), ("4_1", "4_1"),
]

# KnotInfo's grid notation is read as (column, row) pairs with row 1 at the
# bottom. With vertical-over crossings this gives the mirror of KnotInfo's
# chirality (the trefoil comes out with writhe -3), hence the reflection;
MIRROR_KNOTINFO_GRIDS = True

T = sympy.Symbol("t")


def orient(n, rows):
    """rows[r] = two columns holding markers; returns (xs, os)."""
    cols = [[] for _ in range(n)]
    for r, pair in enumerate(rows):
        for c in pair:
            cols[c].append(r)
    xs, os_ = [None] * n, [None] * n
    r, c = 0, min(rows[0])
    for _ in range(n):
        other = rows[r][0] if rows[r][1] == c else rows[r][1]
        os_[r], xs[r] = c, other
        col = cols[other]
        r = col[0] if col[1] == r else col[1]
        c = other
    if None in xs or r != 0:
        raise ValueError("arc presentation is not a single closed curve")
    return xs, os_


def mirror(g):
    n = g["n"]
    return {"n": n, "x": [n - 1 - v for v in g["x"]], "o": [n - 1 - v for v in g["o"]]}


def translate(g, dr, dc):
    n = g["n"]
    xs, os_ = [0] * n, [0] * n
    for r in range(n):
        xs[(r + dr) % n] = (g["x"][r] + dc) % n
        os_[(r + dr) % n] = (g["o"][r] + dc) % n
    return {"n": n, "x": xs, "o": os_}


def connect_sum(a, b):
    p, q = a["n"], b["n"]
    # X of a's bottom row to a's top-right corner, O of b's bottom row to b's origin.
    a = translate(a, p - 1, p - 1 - a["x"][0])
    b = translate(b, 0, -b["o"][0])
    m = p + q - 1
    xs, os_ = [0] * m, [0] * m
    for r in range(p - 1):
        xs[r], os_[r] = a["x"][r], a["o"][r]
    for r in range(1, q):
        xs[p - 1 + r], os_[p - 1 + r] = b["x"][r] + p - 1, b["o"][r] + p - 1
    # merged row keeps a's O and b's X
    os_[p - 1] = a["o"][p - 1]
    xs[p - 1] = b["x"][0] + p - 1
    return {"n": m, "x": xs, "o": os_}


def transpose(g):
    n = g["n"]
    xs, os_ = [0] * n, [0] * n
    for r in range(n):
        xs[g["x"][r]] = r
        os_[g["o"][r]] = r
    return {"n": n, "x": xs, "o": os_}


def commutable(g, r):
    """Rows r and r+1 (mod n) have disjoint or nested spans and no shared column."""
    n = g["n"]
    s = (r + 1) % n
    a = sorted((g["x"][r], g["o"][r]))
    b = sorted((g["x"][s], g["o"][s]))
    if set(a) & set(b):
        return False
    return a[1] < b[0] or b[1] < a[0] or (a[0] < b[0]) == (b[1] < a[1])


def swap_rows(g, r):
    n = g["n"]
    s = (r + 1) % n
    xs, os_ = list(g["x"]), list(g["o"])
    xs[r], xs[s] = xs[s], xs[r]
    os_[r], os_[s] = os_[s], os_[r]
    return {"n": n, "x": xs, "o": os_}


def destabilized(g):
    """Collapse the first cyclic 2x2 block holding three markers, or None."""
    n = g["n"]
    where = {}
    for r in range(n):
        where[(r, g["x"][r])] = "x"
        where[(r, g["o"][r])] = "o"
    for r in range(n):
        for c in range(n):
            rows, cols = (r, (r + 1) % n), (c, (c + 1) % n)
            cells = [(i, j) for i in rows for j in cols]
            if sum(cell in where for cell in cells) != 3:
                continue
            er, ec = next(cell for cell in cells if cell not in where)
            kr = rows[1] if er == rows[0] else rows[0]  # corner marker sits at (kr, kc)
            kc = cols[1] if ec == cols[0] else cols[0]
            kind = "o" if where[(kr, kc)] == "x" else "x"
            out = {"x": list(g["x"]), "o": list(g["o"])}
            out[kind][er] = ec
            keep = [i for i in range(n) if i != kr]
            fix = lambda v: v - (v > kc)
            return {"n": n - 1, "x": [fix(out["x"][i]) for i in keep], "o": [fix(out["o"][i]) for i in keep]}
    return None


def reduce_grid(g, depth=6):
    """Breadth-first over row and column commutations for a destabilization;
    repeats until none is found within `depth` commutations."""
    while True:
        frontier, seen, found = [g], {json.dumps(g)}, None
        for _ in range(depth + 1):
            nxt = []
            for h in frontier:
                found = destabilized(h)
                if found:
                    break
                for t in (False, True):
                    base = transpose(h) if t else h
                    for r in range(h["n"]):
                        if commutable(base, r):
                            k = swap_rows(base, r)
                            k = transpose(k) if t else k
                            key = json.dumps(k)
                            if key not in seen:
                                seen.add(key)
                                nxt.append(k)
            if found:
                break
            frontier = nxt
        if not found:
            return g
        g = found


def minimal_sum(a, b):
    """Connected sum reduced to size a.n + b.n - 2 (arc index is additive),
    trying each choice of merge row when the first does not shrink."""
    target = a["n"] + b["n"] - 2
    best = None
    for da in range(a["n"]):
        for db in range(b["n"]):
            g = reduce_grid(connect_sum(translate(a, da, 0), translate(b, db, 0)), depth=6)
            if best is None or g["n"] < best["n"]:
                best = g
            if best["n"] <= target:
                return best
    return best


def laurent(expr):
    expr = sympy.expand(sympy.sympify(expr.replace("^", "**"), locals={"t": T}))
    terms = {}
    for term in sympy.Add.make_args(expr):
        coeff, powers = term.as_coeff_exponent(T)
        terms[int(powers)] = terms.get(int(powers), 0) + int(coeff)
    return {e: c for e, c in terms.items() if c != 0}


def mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def jones_in_a(jt):
    return {-4 * e: c for e, c in jt.items()}


def mirror_name(name):
    amphichiral = {"4_1", "6_3", "8_3", "8_9", "8_12", "8_17", "8_18"}
    out = []
    for f in name.split("#"):
        base = f.rstrip("m")
        out.append(base if base in amphichiral or f.endswith("m") else base + "m")
    return "#".join(sorted(out, key=lambda f: (tuple(int(v) for v in f.rstrip("m").split("_")), f.endswith("m"))))


def mirror_a(p):
    return {-e: c for e, c in p.items()}


def normalize_alexander(p):
    lo, hi = min(p), max(p)
    if (lo + hi) % 2:
        raise ValueError("Alexander polynomial of a knot must have even span")
    shift = (lo + hi) // 2
    p = {e - shift: c for e, c in p.items()}
    if sum(p.values()) < 0:
        p = {e: -c for e, c in p.items()}
    return p


def text(p):
    if not p:
        return "0"
    return ",".join(f"{p[e]}:{e}" for e in sorted(p))


def grid_from_knotinfo(k):
    pairs = json.loads(k["grid_notation"])
    n = len(pairs) // 2
    per_row = [[] for _ in range(n)]
    for col, row in pairs:
        per_row[row - 1].append(col - 1)
    xs, os_ = orient(n, per_row)
    grid = {"n": n, "x": xs, "o": os_}
    return mirror(grid) if MIRROR_KNOTINFO_GRIDS else grid


def crossing_number(name):
    head = name.split("_")[0]
    return int(head) if head.isdigit() else None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()

    from database_knotinfo import link_list

    knots = link_list()
    rows = {k["name"]: k for k in knots if k["name"] in PRIMES}
    seeds, refs, prime_grid, prime_ref = [], [], {}, {}

    seeds.append({"name": "0_1", "grid": {"n": 2, "x": [0, 1], "o": [1, 0]}})
    refs.append({"name": "0_1", "jones": "1:0", "alexander": "1:0"})

    for name in PRIMES:
        k = rows[name]
        grid = grid_from_knotinfo(k)
        jones = jones_in_a(laurent(k["jones_polynomial"]))
        alex = normalize_alexander(laurent(k["alexander_polynomial"]))
        prime_grid[name], prime_ref[name] = grid, (jones, alex)
        prime_grid[name + "m"] = mirror(grid)
        prime_ref[name + "m"] = (mirror_a(jones), alex)
        seeds.append({"name": name, "grid": grid})
        refs.append({"name": name, "jones": text(jones), "alexander": text(alex)})

    for a, b in COMPOSITES:
        name = f"{a}#{b}"
        seeds.append({"name": name, "grid": minimal_sum(prime_grid[a], prime_grid[b])})
        ja, aa = prime_ref[a]
        jb, ab = prime_ref[b]
        refs.append({"name": name, "jones": text(mul(ja, jb)), "alexander": text(mul(aa, ab))})

    keys = {}
    for r in refs:
        j = {int(t.split(":")[1]): int(t.split(":")[0]) for t in r["jones"].split(",")}
        keys[(r["jones"], r["alexander"])] = r["name"]
        keys.setdefault((text(mirror_a(j)), r["alexander"]), mirror_name(r["name"]))
    aliases = []
    for k in knots:
        cn = crossing_number(k["name"] or "")
        if cn is None or not 9 <= cn <= 12 or not k["grid_notation"]:
            continue
        jones = jones_in_a(laurent(k["jones_polynomial"]))
        alex = text(normalize_alexander(laurent(k["alexander_polynomial"])))
        for mirrored in (False, True):
            j = text(mirror_a(jones) if mirrored else jones)
            if (j, alex) in keys:
                grid = grid_from_knotinfo(k)
                aliases.append({"name": k["name"] + ("m" if mirrored else ""),
                                "aliases": keys[(j, alex)],
                                "grid": mirror(grid) if mirrored else grid})

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    def dump(path, records, key):
        lines = ",\n".join("  " + json.dumps(r, separators=(", ", ": ")) for r in records)
        path.write_text("[\n" + lines + "\n]\n")

    dump(out / "seeds.json", seeds, "grid")
    dump(out / "reference_polynomials.json", refs, "jones")
    dump(out / "aliases.json", aliases, "grid")
    print(f"wrote {len(seeds)} seeds, {len(refs)} reference records and {len(aliases)} aliases to {out}")


if __name__ == "__main__":
    main()
