#!/usr/bin/env python3
"""Reconstruct numbered minimal diagrams from projected PD codes.

The projection of a polygonal realization typically has far more crossings
than the knot's crossing number.  This tool simplifies the projected diagram
with Reidemeister moves (R1/R2 reductions, R3 wandering) down to a target
crossing count, then searches for a crossing numbering under which a given
set of generating strand labels (see data/homs/*.gens) resolves to arcs and
propagates to a complete, consistent, surjective transposition labeling.
The winning diagram is written as a PD fixture whose crossing order realizes
that numbering.

State representation: a diagram is a cyclic sequence of passages
(crossing_id, 'O'|'U') plus a sign per crossing.  The planar embedding is
implied: each crossing's four slots are, counterclockwise from the inbound
under-strand, [under_in, x, under_out, y] with the over pair at (x, y); for
sign -1 the over strand enters at slot 1, for sign +1 at slot 3.  Planarity
of a state is verified by Euler's formula (faces == crossings + 2).
"""

import argparse
import heapq
import itertools
import re
import subprocess
import sys
from collections import Counter
from pathlib import Path


# ---------------------------------------------------------------------------
# parsing

PD_RE = re.compile(r"X\[(\d+),(\d+),(\d+),(\d+)\]")


def parse_pd_text(text):
    """Return (seq, signs) from text containing X[a,b,c,d] tuples."""
    tuples = [tuple(map(int, m)) for m in PD_RE.findall(text)]
    if not tuples:
        raise ValueError("no PD tuples found")
    n = len(tuples)
    m = 2 * n
    passage = {}
    signs = {}
    for idx, (a, b, c, d) in enumerate(tuples):
        if c != a % m + 1:
            raise ValueError(f"tuple {idx}: under_out != under_in + 1")
        if d == b % m + 1:
            over_in, sign = b, -1
        elif b == d % m + 1:
            over_in, sign = d, +1
        else:
            raise ValueError(f"tuple {idx}: over strand edges not consecutive")
        signs[idx] = sign
        for edge, kind in ((a, "U"), (over_in, "O")):
            if edge in passage:
                raise ValueError(f"edge {edge} enters two crossings")
            passage[edge] = (idx, kind)
    if len(passage) != m:
        raise ValueError("missing passages")
    # edge k ends at passage k; 0-based position i holds passage at edge i+1
    seq = tuple(passage[k] for k in range(1, m + 1))
    return seq, signs


def parse_gens_text(text):
    """Return [((begin, overs, end), (a, b)), ...] from a .gens file."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        lhs, rhs = line.split("->")
        nums = [int(t) for t in re.findall(r"-?\d+", lhs)]
        if len(nums) < 2 or nums[0] >= 0 or nums[-1] >= 0:
            raise ValueError(f"bad strand spec: {line!r}")
        if any(v <= 0 for v in nums[1:-1]):
            raise ValueError(f"bad strand spec: {line!r}")
        pair = [int(t) for t in re.findall(r"\d+", rhs)]
        if len(pair) != 2:
            raise ValueError(f"bad transposition: {line!r}")
        out.append(((-nums[0], tuple(nums[1:-1]), -nums[-1]),
                    frozenset(pair)))
    return out


# ---------------------------------------------------------------------------
# combinatorial map

def _in_slot(signs, c, t):
    if t == "U":
        return 0
    return 1 if signs[c] == -1 else 3


def _out_slot(signs, c, t):
    if t == "U":
        return 2
    return 3 if signs[c] == -1 else 1


def build_map(seq, signs):
    """Return (pos, pair, edge_at): passage positions, dart pairing, dart->edge."""
    m = len(seq)
    pos = {}
    for i, (c, t) in enumerate(seq):
        slot = pos.setdefault(c, {})
        if t in slot:
            raise ValueError("crossing visited twice with same role")
        slot[t] = i
    for c, slot in pos.items():
        if len(slot) != 2:
            raise ValueError(f"crossing {c} missing a passage")
    pair = {}
    edge_at = {}
    for i in range(m):
        c1, t1 = seq[i]
        c2, t2 = seq[(i + 1) % m]
        d1 = (c1, _out_slot(signs, c1, t1))
        d2 = (c2, _in_slot(signs, c2, t2))
        if d1 in pair or d2 in pair:
            raise ValueError("dart used twice")
        pair[d1] = d2
        pair[d2] = d1
        edge_at[d1] = i
        edge_at[d2] = i
    return pos, pair, edge_at


def faces_of(pair):
    seen = set()
    faces = []
    for d0 in pair:
        if d0 in seen:
            continue
        face = []
        d = d0
        while True:
            face.append(d)
            seen.add(d)
            c, s = d
            d = pair[(c, (s + 1) % 4)]
            if d == d0:
                break
        faces.append(face)
    return faces


def check_planar(seq, signs):
    if not seq:
        return
    _, pair, _ = build_map(seq, signs)
    n = len(seq) // 2
    nf = len(faces_of(pair))
    if nf != n + 2:
        raise ValueError(f"not planar: {nf} faces for {n} crossings")


def _is_under_slot(s):
    return s in (0, 2)


# ---------------------------------------------------------------------------
# Reidemeister moves

def _drop(seq, signs, cids):
    s2 = tuple(p for p in seq if p[0] not in cids)
    g2 = {c: v for c, v in signs.items() if c not in cids}
    return s2, g2


def reductions(seq, signs, faces):
    """All states reachable by a single R1 or R2 reduction."""
    out = []
    for f in faces:
        if len(f) == 1:
            out.append(_drop(seq, signs, {f[0][0]}))
        elif len(f) == 2:
            (c1, s1), (c2, s2) = f
            if c1 == c2:
                continue
            if _is_under_slot((s1 + 1) % 4) == _is_under_slot(s2):
                out.append(_drop(seq, signs, {c1, c2}))
    return out


def reduce_greedy(seq, signs):
    """Apply R1/R2 reductions until none applies. Returns (seq, signs)."""
    while seq:
        _, pair, _ = build_map(seq, signs)
        faces = faces_of(pair)
        if len(faces) != len(seq) // 2 + 2:
            raise ValueError("lost planarity during reduction")
        red = reductions(seq, signs, faces)
        if not red:
            break
        seq, signs = red[0]
    return seq, signs


def r3_moves(seq, signs):
    """Return a list of position-index triples, one per admissible R3 move."""
    _, pair, edge_at = build_map(seq, signs)
    out = []
    for f in faces_of(pair):
        if len(f) != 3:
            continue
        if len({d[0] for d in f}) != 3:
            continue
        coherent = False
        for k in range(3):
            c, s = f[k]
            nd = f[(k + 1) % 3]
            if _is_under_slot((s + 1) % 4) == _is_under_slot(nd[1]):
                coherent = True
                break
        if not coherent:
            continue
        idxs = tuple(sorted(edge_at[(d[0], (d[1] + 1) % 4)] for d in f))
        out.append(idxs)
    return out


def apply_r3(seq, idxs):
    m = len(seq)
    sl = list(seq)
    touched = set()
    for e in idxs:
        a, b = e, (e + 1) % m
        if a in touched or b in touched:
            raise ValueError("overlapping R3 edges")
        touched.update((a, b))
        sl[a], sl[b] = sl[b], sl[a]
    return tuple(sl)


def r2up_moves(seq, signs):
    """All states reachable by one R2 increase (push a strand over a
    neighbouring strand across a shared face).

    Candidates are generated by splicing an over-over pair into one edge and
    an under-under pair into another edge of the same face, in every
    insertion order and with both opposite-sign assignments; planarity
    (Euler's formula) filters the geometrically valid ones, and any planar
    over-over/under-under double splice is an R2 move because the two new
    crossings bound an empty bigon.
    """
    if not seq:
        return []
    m = len(seq)
    _, pair, edge_at = build_map(seq, signs)
    nc1 = max(signs) + 1
    nc2 = nc1 + 1
    out = []
    done = set()
    for f in faces_of(pair):
        edges = sorted({edge_at[d] for d in f})
        for i, j in itertools.permutations(edges, 2):
            if (i, j) in done:
                continue
            done.add((i, j))
            for o_ord in ((nc1, nc2), (nc2, nc1)):
                for u_ord in ((nc1, nc2), (nc2, nc1)):
                    for s1 in (1, -1):
                        ns = []
                        for p in range(m):
                            ns.append(seq[p])
                            if p == i:
                                ns.extend(((o_ord[0], "O"), (o_ord[1], "O")))
                            if p == j:
                                ns.extend(((u_ord[0], "U"), (u_ord[1], "U")))
                        ng = dict(signs)
                        ng[nc1] = s1
                        ng[nc2] = -s1
                        try:
                            check_planar(tuple(ns), ng)
                        except ValueError:
                            continue
                        out.append((tuple(ns), ng))
    return out


def canon(seq, signs):
    """Canonical key of the oriented diagram (rotation + relabeling)."""
    m = len(seq)
    best = None
    for r in range(m):
        relab = {}
        out = []
        for i in range(m):
            c, t = seq[(r + i) % m]
            v = relab.get(c)
            if v is None:
                v = len(relab)
                relab[c] = v
            out.append((v, t == "O", signs[c]))
            if best is not None and tuple(out) > best[: len(out)]:
                break
        else:
            tup = tuple(out)
            if best is None or tup < best:
                best = tup
    return best


def explore(starts, target, max_states=60000, up=2, log=None):
    """Yield distinct diagrams with exactly `target` crossings, lazily.

    `starts` is a list of (seq, signs) diagrams of the same knot (e.g. from
    different projection directions).  Branches over every applicable R1/R2
    reduction and every R3 move, visiting smaller diagrams first; states
    with at most target + up - 2 crossings additionally branch over R2
    increases, which lets the search wander between minimal forms that
    monotone simplification cannot connect.
    """
    counter = itertools.count()
    heap = []
    seen = set()

    def push(ns, ng):
        try:
            check_planar(ns, ng)
        except ValueError:
            return
        key = canon(ns, ng)
        if key in seen or len(seen) >= max_states:
            return
        seen.add(key)
        heapq.heappush(heap, (len(ns) // 2, next(counter), ns, ng))

    for sq, sg in starts:
        sq, sg = reduce_greedy(sq, sg)
        push(sq, sg)
    best_seen = min(n for n, _, _, _ in heap) if heap else 0

    while heap:
        n, _, sq, sg = heapq.heappop(heap)
        if n < best_seen:
            best_seen = n
            if log:
                log(f"  reached {n} crossings ({len(seen)} states)")
        if n < target:
            raise ValueError(f"simplified below target: {n} < {target}")
        if n == target:
            yield sq, sg
        _, pair, _ = build_map(sq, sg)
        faces = faces_of(pair)
        for ns, ng in reductions(sq, sg, faces):
            push(ns, ng)
        for idxs in r3_moves(sq, sg):
            try:
                ns = apply_r3(sq, idxs)
            except ValueError:
                continue
            push(ns, dict(sg))
        if n + 2 <= target + up:
            for ns, ng in r2up_moves(sq, sg):
                push(ns, ng)


def variants(seq, signs):
    """The four oriented variants of a diagram: identity, reversed, and the
    mirror image (over/under exchanged) in both orientations."""
    mseq = tuple((c, "U" if t == "O" else "O") for c, t in seq)
    msigns = {c: -s for c, s in signs.items()}
    yield "", seq, signs
    yield "reversed", tuple(reversed(seq)), signs
    yield "mirror", mseq, msigns
    yield "mirror reversed", tuple(reversed(mseq)), msigns


# ---------------------------------------------------------------------------
# arcs, relations, labelings

def arcs_of(seq):
    """Arcs of the diagram: dicts with begin/overs/end crossing ids."""
    m = len(seq)
    unders = [i for i, (c, t) in enumerate(seq) if t == "U"]
    arcs = []
    for j, u in enumerate(unders):
        nxt = unders[(j + 1) % len(unders)]
        overs = []
        i = (u + 1) % m
        while i != nxt:
            overs.append((i, seq[i][0]))
            i = (i + 1) % m
        arcs.append({
            "begin": seq[u][0],
            "overs": [c for _, c in overs],
            "over_pos": [p for p, _ in overs],
            "end": seq[nxt][0],
        })
    return arcs


def relations_of(seq, arcs):
    """Per crossing: (over_arc, under_in_arc, under_out_arc) as arc indices."""
    pos2arc = {}
    endarc = {}
    startarc = {}
    for ai, arc in enumerate(arcs):
        for p in arc["over_pos"]:
            pos2arc[p] = ai
        endarc[arc["end"]] = ai
        startarc[arc["begin"]] = ai
    over_pos = {c: i for i, (c, t) in enumerate(seq) if t == "O"}
    rels = []
    for c in over_pos:
        rels.append((pos2arc[over_pos[c]], endarc[c], startarc[c]))
    return rels


def conj(o, x):
    a, b = sorted(o)
    return frozenset(b if v == a else a if v == b else v for v in x)


def propagate(n_arcs, rels, init):
    """Fixpoint propagation; returns labels dict or None on conflict."""
    lab = dict(init)
    changed = True
    while changed:
        changed = False
        for o, a, b in rels:
            lo = lab.get(o)
            if lo is None:
                continue
            la = lab.get(a)
            lb = lab.get(b)
            if la is not None:
                nb = conj(lo, la)
                if lb is None:
                    lab[b] = nb
                    changed = True
                elif lb != nb:
                    return None
            elif lb is not None:
                lab[a] = conj(lo, lb)
                changed = True
    if len(lab) == n_arcs:
        for o, a, b in rels:
            if conj(lab[o], lab[a]) != lab[b]:
                return None
    return lab


def surjective(labels, m):
    adj = {}
    for s in labels:
        a, b = sorted(s)
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    if set(adj) != set(range(1, m + 1)):
        return False
    seen = {1}
    stack = [1]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == m


def match_specs(arcs, specs):
    """Yield (num2cid, arc_assignment) bijections resolving every spec."""
    start_of = {}
    for ai, arc in enumerate(arcs):
        start_of[arc["begin"]] = ai
    sols = []

    def rec(k, num2cid, cid2num, chosen):
        if k == len(specs):
            sols.append((dict(num2cid), list(chosen)))
            return
        (bg, ovs, en), _ = specs[k]
        for ai, arc in enumerate(arcs):
            if ai in chosen or len(arc["overs"]) != len(ovs):
                continue
            nums = [bg, *ovs, en]
            cids = [arc["begin"], *arc["overs"], arc["end"]]
            added = []
            ok = True
            for num, cid in zip(nums, cids):
                have = num2cid.get(num)
                if have is not None:
                    if have != cid:
                        ok = False
                        break
                elif cid in cid2num:
                    ok = False
                    break
                else:
                    num2cid[num] = cid
                    cid2num[cid] = num
                    added.append((num, cid))
            if ok:
                chosen.append(ai)
                rec(k + 1, num2cid, cid2num, chosen)
                chosen.pop()
            for num, cid in added:
                del num2cid[num]
                del cid2num[cid]

    rec(0, {}, {}, [])
    return sols


def fox_det(seq):
    """|Alexander polynomial at -1| of the diagram (integer Bareiss)."""
    arcs = arcs_of(seq)
    rels = relations_of(seq, arcs)
    n = len(arcs)
    if n == 0:
        return 1
    mat = [[0] * n for _ in range(n)]
    for r, (o, a, b) in enumerate(rels):
        mat[r][o] += 2
        mat[r][a] -= 1
        mat[r][b] -= 1
    k = n - 1
    if k == 0:
        return 1
    m = [row[:k] for row in mat[:k]]
    sign = 1
    prev = 1
    for i in range(k):
        if m[i][i] == 0:
            for r in range(i + 1, k):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return abs(m[k - 1][k - 1])


# ---------------------------------------------------------------------------
# reconstruction driver

TABLE2_MULTISET = Counter({
    frozenset({1, 2}): 3,
    frozenset({1, 3}): 1,
    frozenset({1, 4}): 1,
    frozenset({2, 5}): 1,
    frozenset({2, 3}): 2,
    frozenset({2, 4}): 2,
    frozenset({3, 4}): 1,
    frozenset({4, 5}): 2,
})

def try_replay(seq, specs, label):
    """Try to resolve `specs` on the oriented diagram; return solution or None.

    A solution is (num2cid, labels) where labels is the complete propagated
    labeling (arc index -> frozenset pair).  For 13n350 the published figure
    prints every strand label, so the complete labeling must also reproduce
    that multiset.
    """
    arcs = arcs_of(seq)
    rels = relations_of(seq, arcs)
    for num2cid, chosen in match_specs(arcs, specs):
        init = {ai: specs[k][1] for k, ai in enumerate(chosen)}
        lab = propagate(len(arcs), rels, init)
        if lab is None or len(lab) != len(arcs):
            continue
        if not surjective(lab.values(), 5):
            continue
        if label == "13n350" and Counter(lab.values()) != TABLE2_MULTISET:
            continue
        return num2cid, lab
    return None


def emit_pd(seq, signs, num2cid, label, path):
    """Write the PD fixture with crossings ordered by assigned number."""
    n = len(seq) // 2
    m = 2 * n
    cid2num = {c: k for k, c in num2cid.items()}
    free = sorted(set(range(1, n + 1)) - set(num2cid))
    it = iter(free)
    for c, _ in seq:
        if c not in cid2num:
            cid2num[c] = next(it)
    pos = {}
    for i, (c, t) in enumerate(seq):
        pos.setdefault(c, {})[t] = i

    def lbl(i):
        return m if i % m == 0 else i % m

    rows = []
    for c, num in cid2num.items():
        pu, po = pos[c]["U"], pos[c]["O"]
        a, cc = lbl(pu), lbl(pu + 1)
        oi, oo = lbl(po), lbl(po + 1)
        if signs[c] == -1:
            b, d = oi, oo
        else:
            b, d = oo, oi
        rows.append((num, f"X[{a},{b},{cc},{d}]"))
    rows.sort()
    text = "".join(f"{r}\n" for _, r in rows)
    header = (f"# {n}-crossing diagram of {label}; crossing numbering matches"
              f" the strand labels in homs/{label}.gens\n")
    Path(path).write_text(header + text)


PROJECTION_DIRS = [
    None, (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 2, 3), (2, 1, 5),
    (3, -1, 2), (1, -2, 4), (5, 2, -3), (2, 3, 7), (-1, 4, 2), (3, 5, -2),
    (7, 1, -4), (2, -5, 3), (4, 7, 1), (1, 3, -5), (6, 1, 2), (1, 5, 4),
    (-3, 2, 8), (2, 9, 5), (8, 3, -1), (1, 7, -3), (5, -4, 9), (3, 8, 5),
]


def candidate_starts(label, data, gordian, ndirs, nstarts, log=print):
    """Project the polygon along several directions; return the `nstarts`
    distinct simplest reduced diagrams plus the common determinant."""
    found = {}
    det0 = None
    for d in PROJECTION_DIRS[:ndirs]:
        cmd = [str(gordian), "project", "--poly", str(data / f"{label}.poly")]
        if d is not None:
            cmd += ["--dir", ",".join(map(str, d))]
        r = subprocess.run(cmd, capture_output=True, text=True)
        if r.returncode != 0:
            continue
        try:
            seq, signs = parse_pd_text(r.stdout)
            check_planar(seq, signs)
            det = fox_det(seq)
            red, redsigns = reduce_greedy(seq, signs)
        except ValueError:
            continue
        if det0 is None:
            det0 = det
        elif det != det0:
            raise ValueError(f"{label}: determinant {det} != {det0} along {d}")
        key = canon(red, redsigns)
        if key not in found:
            found[key] = (len(red) // 2, len(seq) // 2, d, red, redsigns)
    starts = sorted(found.values(), key=lambda t: (t[0], t[1]))[:nstarts]
    for n1, n0, d, _, _ in starts:
        log(f"  start dir={d}: {n0} -> {n1} crossings")
    return [(sq, sg) for _, _, _, sq, sg in starts], det0


def reconstruct(label, starts, det0, gens_text, out_path, target,
                max_states, up, log=print):
    specs = parse_gens_text(gens_text)
    tried = 0
    for sq, sg in explore(starts, target, max_states=max_states, up=up,
                          log=log):
        det = fox_det(sq)
        if det != det0:
            raise ValueError(f"{label}: determinant changed {det0} -> {det}")
        for vname, oseq, osigns in variants(sq, sg):
            tried += 1
            sol = try_replay(oseq, specs, label)
            if sol is None:
                continue
            num2cid, lab = sol
            emit_pd(oseq, osigns, num2cid, label, out_path)
            counts = Counter(lab.values())
            dist = " ".join(
                f"({a} {b})x{counts[s]}" for s in sorted(counts, key=sorted)
                for a, b in [sorted(s)])
            note = f" [{vname}]" if vname else ""
            log(f"{label}: replay OK after {tried} candidate orientations"
                f"{note}; determinant {det0}; labels {dist}")
            return True
    log(f"{label}: FAILED after {tried} candidate orientations")
    return False


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("labels", nargs="*", help="knot labels to reconstruct")
    ap.add_argument("--data", default="data")
    ap.add_argument("--build", default="build")
    ap.add_argument("--max-states", type=int, default=60000)
    ap.add_argument("--dirs", type=int, default=len(PROJECTION_DIRS),
                    help="how many projection directions to try")
    ap.add_argument("--starts", type=int, default=6,
                    help="how many distinct reduced starts to explore")
    ap.add_argument("--up", type=int, default=2,
                    help="crossing headroom above target for R2 increases")
    ap.add_argument("--force", action="store_true",
                    help="redo labels that already have a diagram")
    args = ap.parse_args()

    data = Path(args.data)
    gordian = Path(args.build) / "gordian"
    labels = args.labels or [p.stem for p in sorted((data / "homs").glob("*.gens"))]
    failures = []
    for label in labels:
        out = data / "diagrams" / f"{label}.pd"
        if out.exists() and not args.force:
            print(f"{label}: diagram already present, skipping")
            continue
        target = 14 if label.startswith("14") else 13
        starts, det0 = candidate_starts(label, data, gordian, args.dirs,
                                        args.starts)
        print(f"{label}: {len(starts)} starts, determinant {det0}")
        gens = (data / "homs" / f"{label}.gens").read_text()
        out.parent.mkdir(parents=True, exist_ok=True)
        if not reconstruct(label, starts, det0, gens, out, target,
                           args.max_states, args.up):
            failures.append(label)
    if failures:
        print(f"failed: {', '.join(failures)}")
        return 1
    print("all diagrams reconstructed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
