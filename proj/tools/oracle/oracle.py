#!/usr/bin/env python3
"""Independent reference for the golden values used by the C++ tests.

Re-implements the translation equations, span/work, a cost-monad
interpretation and a trace-DAG interpretation on a tuple encoding of terms,
then writes tests/golden/<name>.json. Shares no code with the library.

Term encoding: (tag, label, *children), tags as in the C++ Node enum.
"""
import itertools
import json
import pathlib
import sys

S, T, C = "src", "tgt", "com"


class Fresh:
    def __init__(self):
        self.n = itertools.count(1)

    def __call__(self):
        return f"${next(self.n)}"


def relabel(e, lab):
    tag = e[0]
    if tag == "Lam":
        return ("Lam", lab, e[2], e[3])
    if tag in ("Var", "Const", "Lit"):
        return (tag, lab, e[2])
    if tag == "Unt":
        return ("Unt", lab)
    return (tag, lab) + tuple(relabel(k, lab) for k in e[2:])


def AP(f, e, fresh):
    if f[0] == "Pure" and e[0] == "Pure":
        return ("Pure", T, ("App", C, f[2], e[2]))
    if f[0] == "Pure":
        x = fresh()
        return ("Map", T, ("Lam", T, x, ("App", C, f[2], ("Var", C, x))), e)
    if e[0] == "Pure":
        x = fresh()
        return ("Map", T, ("Lam", T, x, ("App", C, ("Var", C, x), e[2])), f)
    return ("Ap", T, f, e)


def JOIN(e):
    return relabel(e[2], T) if e[0] == "Pure" else ("Join", T, e)


def to_com(e):
    return relabel(e, C) if e[0] != "Lam" else ("Lam", C, e[2], e[3])


def PURE(e, fresh):
    tag = e[0]
    if tag in ("Var", "Const", "Lit", "Unt", "Lam"):
        return ("Pure", T, to_com(e))
    if tag in ("Fst", "Snd"):
        x = fresh()
        return AP(("Pure", T, ("Lam", C, x, (tag, C, ("Var", C, x)))), PURE(e[2], fresh), fresh)
    if tag == "Prd":
        a, b = fresh(), fresh()
        pairer = ("Lam", C, a, ("Lam", C, b, ("Prd", C, ("Var", C, a), ("Var", C, b))))
        left = AP(("Pure", T, pairer), PURE(e[2], fresh), fresh)
        return AP(left, PURE(e[3], fresh), fresh)
    if tag == "App":
        return AP(PURE(e[2], fresh), PURE(e[3], fresh), fresh)
    if tag == "Each":
        return JOIN(PURE(e[2], fresh))
    raise ValueError(tag)


def seq(e, fresh):
    """Do-notation baseline: every ap becomes bind-then-bind-then-pure."""
    def sap(fs, xs):
        f, x = fresh(), fresh()
        inner = ("Join", T, ("Map", T, ("Lam", T, x, ("Pure", T, ("App", C, ("Var", C, f), ("Var", C, x)))), xs))
        return ("Join", T, ("Map", T, ("Lam", T, f, inner), fs))

    tag = e[0]
    if tag in ("Var", "Const", "Lit", "Unt", "Lam"):
        return ("Pure", T, to_com(e))
    if tag in ("Fst", "Snd"):
        x = fresh()
        return sap(("Pure", T, ("Lam", C, x, (tag, C, ("Var", C, x)))), seq(e[2], fresh))
    if tag == "Prd":
        a, b = fresh(), fresh()
        pairer = ("Lam", C, a, ("Lam", C, b, ("Prd", C, ("Var", C, a), ("Var", C, b))))
        return sap(sap(("Pure", T, pairer), seq(e[2], fresh)), seq(e[3], fresh))
    if tag == "App":
        return sap(seq(e[2], fresh), seq(e[3], fresh))
    if tag == "Each":
        return ("Join", T, seq(e[2], fresh))
    raise ValueError(tag)


def naive(e, fresh):
    tag = e[0]
    if tag in ("Var", "Const", "Lit", "Unt", "Lam"):
        return ("Pure", T, to_com(e))
    if tag in ("Fst", "Snd"):
        x = fresh()
        return ("Ap", T, ("Pure", T, ("Lam", C, x, (tag, C, ("Var", C, x)))), naive(e[2], fresh))
    if tag == "Prd":
        a, b = fresh(), fresh()
        pairer = ("Lam", C, a, ("Lam", C, b, ("Prd", C, ("Var", C, a), ("Var", C, b))))
        return ("Ap", T, ("Ap", T, ("Pure", T, pairer), naive(e[2], fresh)), naive(e[3], fresh))
    if tag == "App":
        return ("Ap", T, naive(e[2], fresh), naive(e[3], fresh))
    if tag == "Each":
        return ("Join", T, naive(e[2], fresh))
    raise ValueError(tag)


def measure(e, combine):
    tag = e[0]
    if tag in ("Var", "Const", "Lit", "Unt", "Lam", "Pure"):
        return 0
    if tag in ("Fst", "Snd"):
        return measure(e[2], combine)
    if tag in ("Each", "Join"):
        return 1 + measure(e[2], combine)
    return combine(measure(e[2], combine), measure(e[3], combine))


def span(e):
    return measure(e, max)


def work(e):
    return measure(e, lambda a, b: a + b)


# --- interpretation -------------------------------------------------------
# An action is a DAG fragment plus a value: (nodes, edges, value), nodes as
# (id, label). Cost is read off the DAG; latency by the critical path.

class Act:
    counter = itertools.count()

    def __init__(self, nodes, edges, value):
        self.nodes, self.edges, self.value = nodes, edges, value

    @staticmethod
    def pure(v):
        return Act([], [], v)

    @staticmethod
    def prim(label, v):
        return Act([(next(Act.counter), label)], [], v)

    def sinks(self):
        src = {a for a, _ in self.edges}
        return [n for n, _ in self.nodes if n not in src]

    def sources(self):
        dst = {b for _, b in self.edges}
        return [n for n, _ in self.nodes if n not in dst]


def a_map(f, a):
    return Act(a.nodes, a.edges, f(a.value))


def a_ap(fs, xs):
    return Act(fs.nodes + xs.nodes, fs.edges + xs.edges, fs.value(xs.value))


def a_bind(k, a):
    b = k(a.value)
    extra = [(s, t) for s in a.sinks() for t in b.sources()]
    return Act(a.nodes + b.nodes, a.edges + b.edges + extra, b.value)


def evaluate(e, env, consts, mode):
    """mode 'src' returns an Act, 'direct' a value."""
    tag = e[0]
    if mode == "src" and e[1] == S:
        if tag in ("Var", "Const", "Lit", "Unt", "Lam"):
            return Act.pure(evaluate(e, env, consts, "direct"))
        if tag == "Fst":
            return a_map(lambda p: p[0], evaluate(e[2], env, consts, "src"))
        if tag == "Snd":
            return a_map(lambda p: p[1], evaluate(e[2], env, consts, "src"))
        if tag == "App":
            return a_ap(evaluate(e[2], env, consts, "src"), evaluate(e[3], env, consts, "src"))
        if tag == "Prd":
            left = a_map(lambda x: (lambda y: (x, y)), evaluate(e[2], env, consts, "src"))
            return a_ap(left, evaluate(e[3], env, consts, "src"))
        if tag == "Each":
            return a_bind(lambda v: v, evaluate(e[2], env, consts, "src"))
        raise ValueError(tag)
    if mode == "src":
        return Act.pure(evaluate(e, env, consts, "direct"))
    ev = lambda k: evaluate(k, env, consts, "direct")
    if tag == "Var":
        return env[e[2]]
    if tag == "Const":
        return consts[e[2]]
    if tag == "Lit":
        return e[2]
    if tag == "Unt":
        return ()
    if tag == "Prd":
        return (ev(e[2]), ev(e[3]))
    if tag == "Fst":
        return ev(e[2])[0]
    if tag == "Snd":
        return ev(e[2])[1]
    if tag == "App":
        return ev(e[2])(ev(e[3]))
    if tag == "Lam":
        return lambda v, e=e, env=env: evaluate(e[3], {**env, e[2]: v}, consts, "direct")
    if tag == "Pure":
        return Act.pure(ev(e[2]))
    if tag == "Map":
        return a_map(ev(e[2]), ev(e[3]))
    if tag == "Ap":
        return a_ap(ev(e[2]), ev(e[3]))
    if tag == "Join":
        return a_bind(lambda v: v, ev(e[2]))
    raise ValueError(tag)


def dag_stats(a, latency):
    deps = {n: [] for n, _ in a.nodes}
    for s, t in a.edges:
        deps[t].append(s)
    depth, finish = {}, {}

    def d(n):
        if n not in depth:
            depth[n] = 1 + max((d(p) for p in deps[n]), default=0)
        return depth[n]

    def f(n):
        if n not in finish:
            finish[n] = latency + max((f(p) for p in deps[n]), default=0)
        return finish[n]

    return {
        "span": max((d(n) for n in deps), default=0),
        "work": len(deps),
        "latency_ms": max((f(n) for n in deps), default=0),
    }


# --- rendering in the target grammar --------------------------------------

def render(e):
    tag = e[0]
    if tag in ("Var", "Const"):
        return e[2]
    if tag == "Lit":
        return json.dumps(e[2])
    if tag == "Unt":
        return "()"
    if tag == "Prd":
        return f"({render(e[2])}, {render(e[3])})"
    if tag in ("Fst", "Snd"):
        return f"({render(e[2])}).{1 if tag == 'Fst' else 2}"
    if tag == "App":
        return f"({render(e[2])})({render(e[3])})"
    if tag == "Lam":
        return f"(fun {e[2]} -> {render(e[3])})"
    if tag in ("Pure", "Join"):
        return f"({tag.lower()} {render(e[2])})"
    if tag in ("Map", "Ap"):
        return f"({tag.lower()} {render(e[2])} {render(e[3])})"
    raise ValueError(tag)


# --- the two worked programs ----------------------------------------------

def call(f, *args):
    t = ("Const", S, f)
    for a in args:
        t = ("App", S, t, a)
    return t


def fetch(x):
    return ("Each", S, call("fetch", x))


TWO_FETCH = ("Prd", S, fetch(("Lit", S, "foo")), fetch(("Lit", S, "bar")))


def chain(url):
    return fetch(fetch(("Const", S, url)))


TWO_CHAIN = call("concat", chain("urlXX"), chain("urlYY"))


def consts_for():
    def fetch_fn(x):
        return Act.prim(f"fetch({x})", f"fetch({x})")

    return {
        "fetch": fetch_fn,
        "concat": lambda a: lambda b: a + b,
        "urlXX": "urlXX",
        "urlYY": "urlYY",
    }


def report(src):
    out = {}
    forms = {
        "src": (src, "src"),
        "opt": (PURE(src, Fresh()), "direct"),
        "naive": (naive(src, Fresh()), "direct"),
        "seq": (seq(src, Fresh()), "direct"),
    }
    for name, (term, mode) in forms.items():
        act = evaluate(term, {}, consts_for(), mode)
        stats = dag_stats(act, 100)
        out[name] = {
            "syntactic_span": span(term),
            "syntactic_work": work(term),
            "effect_span": stats["span"],
            "effect_work": stats["work"],
            "latency_ms_at_100": stats["latency_ms"],
        }
    out["opt_term"] = render(forms["opt"][0])
    return out


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/golden")
    root.mkdir(parents=True, exist_ok=True)
    for name, term in (("two_fetch", TWO_FETCH), ("two_chain", TWO_CHAIN)):
        (root / f"{name}.json").write_text(json.dumps(report(term), indent=2) + "\n")
        print(f"wrote {root / (name + '.json')}")


if __name__ == "__main__":
    main()
