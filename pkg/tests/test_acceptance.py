"""End-to-end acceptance checks, one test (and one pass/fail line under
pytest -v) per criterion, each with its stated runtime budget."""

import json
import random
import time
from fractions import Fraction

from tarski.cauchyidx import cind
from tarski.cli import main as cli_main
from tarski.formula import qf_eval, qf_form
from tarski.intervals import closed, full_line, mem, open_
from tarski.isolate import count_roots, isolate_roots, refine
from tarski.poly import Poly
from tarski.qelim import decide, q_elim
from tarski.rational import sgr
from tarski.signdet import (
    constraints,
    ctmat1,
    cvec,
    sign_vectors,
    solve_counts,
    tensor_pow,
    tvec,
)
from tarski.sturm import (
    NEG_INF,
    POS_INF,
    nonvanishing_endpoints,
    tarski_query,
    var_sremp,
    var_sremp_inf,
)
from tarski.syntax import formula_to_str, parse_formula

from helpers import (
    check_decF_square,
    check_decF_strict_square,
    check_lcoef_square,
    check_monic_square,
    check_pseudo_divmod_square,
    check_sremp_square,
    check_size_square,
    check_var_at_inf_square,
    check_var_sremp_inf_square,
    ground_polyf,
    linear_factor_poly,
    rand_env,
    rand_formula,
    rand_fraction,
    rand_int_poly,
    rand_nonzero_poly,
    rand_polyf,
    rand_qf_formula,
    rand_term,
    sym_polyf,
)
from test_qelim import CLOSED_CORPUS


def Q(a, b=1):
    return Fraction(a, b)


def _report(name, elapsed, limit):
    print(f"PASS {name}: {elapsed:.1f}s (limit {limit}s)")
    assert elapsed < limit


def test_criterion_01_pseudo_division_specification():
    t0 = time.monotonic()
    rng = random.Random(1001)
    pairs = [(Poly([Q(3), Q(0), Q(2)]), Poly([Q(1), Q(2)]))]  # 2X^2+3 by 2X+1
    while len(pairs) < 500:
        pairs.append((rand_int_poly(rng, 8, 10), rand_nonzero_poly(rng, 8, 10)))
    for p, q in pairs:
        res = p.pseudo_divmod(q)
        assert p.scale(res.scalp) == res.quot * q + res.rem
        assert res.rem.is_zero or res.rem.size < q.size
        assert res.scalp == q.lc ** max(0, p.size - q.size + 1)
    _report("pseudo-division specification (500 pairs)", time.monotonic() - t0, 10)


def test_criterion_02_sturm_counting():
    t0 = time.monotonic()
    rng = random.Random(1002)
    for _ in range(200):
        p, roots = linear_factor_poly(rng, max_factors=5, max_mult=3)
        assert var_sremp_inf(p, p.deriv()) == len(roots)
        # interval count against direct membership of the known roots
        while True:
            a = rand_fraction(rng, 9)
            b = a + Q(rng.randint(1, 9), rng.randint(1, 3))
            try:
                count = var_sremp(a, b, p, p.deriv())
                break
            except ValueError:
                continue
        assert count == sum(1 for r in roots if a < r < b)
    _report("Sturm counting (200 products of linear factors)", time.monotonic() - t0, 30)


def test_criterion_03_var_sremp_cind_and_taq_cind():
    t0 = time.monotonic()
    rng = random.Random(1003)
    checked = 0
    while checked < 200:  # var_sremp = cind
        p, _ = linear_factor_poly(rng)
        q = rand_int_poly(rng, 4)
        b = nonvanishing_endpoints(p, q if not q.is_zero else p.deriv())
        try:
            lhs = var_sremp(-b, b, p, q)
        except ValueError:
            continue
        assert lhs == cind(-b, b, q, p)
        checked += 1
    for _ in range(200):  # taq = cind of p'q over p
        p, _ = linear_factor_poly(rng)
        q = rand_int_poly(rng, 4)
        b = nonvanishing_endpoints(p, p.deriv() * q)
        assert tarski_query(p, q) == cind(-b, b, p.deriv() * q, p)
    _report("var_sremp = cind and taq = cind (200 cases each)", time.monotonic() - t0, 60)


def test_criterion_04_sign_determination():
    t0 = time.monotonic()
    m = ctmat1()
    assert [[m.at(i, j) for j in range(3)] for i in range(3)] == [
        [1, 1, 1],
        [-1, 1, 1],
        [0, 0, 1],
    ]
    assert m.det() == 2
    rng = random.Random(1004)

    def rand_points(k):
        return sorted({rand_fraction(rng, 6) for _ in range(k)})

    def row_times(v, mat):
        return [sum(v[i] * mat.at(i, j) for i in range(mat.rows)) for j in range(mat.cols)]

    for _ in range(200):  # base case: tvec = cvec . ctmat1
        z, q = rand_points(6), rand_int_poly(rng, 4)
        assert tvec(z, [q]) == row_times(cvec(z, [q]), m)
    for n in range(4):  # tensor identity and count recovery
        mn = tensor_pow(m, n)
        for _ in range(20):
            z = rand_points(5)
            sq = [rand_int_poly(rng, 3) for _ in range(n)]
            tv = tvec(z, sq)
            assert tv == row_times(cvec(z, sq), mn)
            counts = solve_counts(tv, n)
            for sv in sign_vectors(n):
                assert counts[sv] == constraints(z, sq, sv)
    _report("sign-determination system", time.monotonic() - t0, 60)


def test_criterion_05_cauchy_bound():
    t0 = time.monotonic()
    rng = random.Random(1005)
    for _ in range(150):
        p = rand_nonzero_poly(rng, 7, 10)
        cb = p.cauchy_bound()
        for root in isolate_roots(p):
            assert -cb <= root.interval.lo.value
            assert root.interval.hi.value <= cb
    _report("Cauchy bound contains every isolating interval", time.monotonic() - t0, 60)


def test_criterion_06_root_isolation():
    t0 = time.monotonic()
    rng = random.Random(1006)
    eps = Q(1, 1000000)
    for trial in range(120):
        if trial % 2 == 0:
            p = rand_nonzero_poly(rng, 6, 8)
            known = None
        else:
            p, roots = linear_factor_poly(rng)
            known = sorted(roots)
        if p.degree < 1:
            continue
        out = isolate_roots(p)
        assert len(out) == count_roots(p, full_line())
        prev_hi = None
        for root in out:
            iso = root.interval
            assert count_roots(p, iso) == 1
            if prev_hi is not None:
                assert iso.lo.value >= prev_hi
            prev_hi = iso.hi.value
        if known is not None:
            assert len(out) == len(known)
            for root, r in zip(out, known):
                assert mem(r, root.interval)
        # refinement: 40 bisections always suffice from the initial width
        for root in out[:2]:
            width = root.interval.hi.value - root.interval.lo.value
            halvings = 0
            while width > eps:
                width /= 2
                halvings += 1
            assert halvings <= 40
            tight = refine(p, root.interval, eps)
            assert tight.hi.value - tight.lo.value <= eps
            assert count_roots(p, tight) == 1
    _report("root isolation and refinement", time.monotonic() - t0, 60)


def test_criterion_07_sgp_right():
    t0 = time.monotonic()
    from tarski.cauchyidx import sgp_right
    from tarski.isolate import sample_right

    rng = random.Random(1007)
    for _ in range(100):
        p, roots = linear_factor_poly(rng)
        x = rng.choice(sorted(roots))
        y = sample_right(p, x)
        assert y > x
        assert sgr(p.eval(y)) == sgp_right(p, x)
        c = rand_fraction(rng, 5)
        assert sgp_right(p.scale(c), x) == sgr(c) * sgp_right(p, x)
    _report("sign immediately right of a root (100 cases)", time.monotonic() - t0, 30)


def test_criterion_08_cps_commuting_squares():
    t0 = time.monotonic()
    rng = random.Random(1008)
    from tarski.formula import eval_term
    from tarski.lift import addF, derivF, eval_poly, if_cps, mulF, oppF, powF, scaleF

    for _ in range(300):  # direct (DT-function) squares
        p, q = rand_polyf(rng, 4, 2), rand_polyf(rng, 4, 2)
        t = rand_term(rng, 1, 2)
        env = rand_env(rng, 2)
        pv, qv = eval_poly(env, p), eval_poly(env, q)
        assert eval_poly(env, addF(p, q)) == pv + qv
        assert eval_poly(env, oppF(p)) == -pv
        assert eval_poly(env, mulF(p, q)) == pv * qv
        assert eval_poly(env, scaleF(t, p)) == pv.scale(eval_term(env, t))
        assert eval_poly(env, derivF(p)) == pv.deriv()
        assert eval_poly(env, powF(p, 2)) == pv ** 2

    for _ in range(300):  # branching (CPS) squares
        env2 = rand_env(rng, 2)
        env1 = rand_env(rng, 1)
        p2, q2 = rand_polyf(rng, 5, 2), rand_polyf(rng, 4, 2)
        p1, q1 = rand_polyf(rng, 4, 1), rand_polyf(rng, 3, 1)
        cond = rand_qf_formula(rng, 2, 1)
        th, el = rand_qf_formula(rng, 1, 1), rand_qf_formula(rng, 1, 1)
        expected = qf_eval(env1, th) if qf_eval(env1, cond) else qf_eval(env1, el)
        assert qf_eval(env1, if_cps(cond, th, el)) == expected
        assert check_lcoef_square(env2, p2)
        assert check_size_square(env2, p2)
        assert check_monic_square(env2, p2)
        assert check_pseudo_divmod_square(env2, p2, q2)
        assert check_sremp_square(env1, p1, q1)
        sp = [rand_polyf(rng, 3, 1) for _ in range(rng.randrange(4))]
        assert check_var_at_inf_square(env1, sp, rng.choice([NEG_INF, POS_INF]))
        assert check_var_sremp_inf_square(env1, p1, q1)
    _report("commuting squares (300 pairs per lifted operation)", time.monotonic() - t0, 60)


def test_criterion_09_quantifier_elimination():
    rng = random.Random(1009)
    worst_single = 0.0
    for text, expected in CLOSED_CORPUS:
        t0 = time.monotonic()
        f, _ = parse_formula(text)
        g = q_elim(f)
        assert qf_form(g), text
        assert decide(f) == expected, text
        worst_single = max(worst_single, time.monotonic() - t0)

    # odd-degree cubic: a root exists for every parameter value
    t0 = time.monotonic()
    f, names = parse_formula("exists x. x^3 + p*x + q = 0")
    g = q_elim(f)
    assert qf_form(g)
    idx = {name: i for i, name in enumerate(names)}
    for _ in range(100):
        vp, vq = rand_env(rng, 2, bound=8)
        env = [Q(0)] * len(names)
        env[idx["p"]], env[idx["q"]] = vp, vq
        assert qf_eval(env, g)
    worst_single = max(worst_single, time.monotonic() - t0)

    # parametric quadratic against the discriminant criterion
    t0 = time.monotonic()
    f, names = parse_formula("exists x. x^2 + b*x + c = 0")
    g = q_elim(f)
    assert qf_form(g)
    idx = {name: i for i, name in enumerate(names)}
    for _ in range(200):
        b, c = rand_env(rng, 2, bound=8)
        env = [Q(0)] * len(names)
        env[idx["b"]], env[idx["c"]] = b, c
        assert qf_eval(env, g) == (b * b - 4 * c >= 0)
    worst_single = max(worst_single, time.monotonic() - t0)
    assert worst_single < 30

    # two nested quantifiers, degree <= 2
    worst_nested = 0.0
    for text, expected in [
        ("forall b. exists x. x^2 + b*x - 1 = 0", True),
        ("exists b. forall x. x^2 + b > 0", True),
        ("forall y. exists x. x^2 = y", False),
    ]:
        t0 = time.monotonic()
        f, _ = parse_formula(text)
        assert decide(f) == expected, text
        worst_nested = max(worst_nested, time.monotonic() - t0)
    assert worst_nested < 300
    print(
        f"PASS quantifier elimination end-to-end: worst single {worst_single:.1f}s "
        f"(limit 30s), worst nested {worst_nested:.1f}s (limit 300s)"
    )


def test_criterion_10_parser_round_trip_and_cli(capsys):
    t0 = time.monotonic()
    rng = random.Random(1010)
    trips = 0
    while trips < 500:
        f0 = rand_formula(rng, 3, 2)
        f1, names = parse_formula(formula_to_str(f0))
        f2, _ = parse_formula(formula_to_str(f1, names), list(names))
        assert f2 == f1
        trips += 1

    def run(*argv):
        code = cli_main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    # exit-code contract
    assert run("decide", "exists x. x^2 = 2")[0] == 0
    assert run("decide", "exists x. x^2 + 1 = 0")[0] == 1
    assert run("decide", "x > 0")[0] == 2
    assert run("decide", "exists x. x >")[0] == 2
    # JSON contract
    code, out, _ = run("decide", "forall x. x^2 + 1 > 0", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and set(doc) == {"command", "input", "result"}
    assert doc["result"] is True
    code, out, _ = run("roots", "x^2 - 2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["command"] == "roots" and len(doc["result"]) == 2
    code, out, _ = run("taq", "x^2 - 1", "x", "--format", "json")
    assert code == 0 and json.loads(out)["result"] == 0
    code, out, _ = run("qelim", "exists x. x^2 + b*x + c = 0", "--format", "json")
    assert code == 0 and "formula" in json.loads(out)["result"]
    _report("parser round-trip (500 formulas) and CLI contracts", time.monotonic() - t0, 10)
