"""Read the deformation parameters (t, p, q, r, s) off restricted root systems with two real components."""

from grrskit.exact import fmt
from grrskit.pairs import pair_automorphism, pair_grrs, parse_pair
from grrskit.restrict import restrict
from grrskit.svparams import FrameMismatch, check_deformed_axioms, sv_parameters
from grrskit.tables import expected_sv

for text in ["gl(4|2):gl(1|1)xgl(3|1)", "gl(2|4):osp(2|4)", "osp(5|4):osp(1|2)xosp(4|2)",
             "osp(4|2):gl(2|1)", "D(2,1;l=-1/2):osp(2|2)xso(2)", "osp(4|4):osp(2|0)xosp(2|4)",
             "F(1|3):gosp(2|4)", "F(1|3):sl(1|4)", "F(1|3):D(1,2;2)"]:
    d = parse_pair(text)
    g = pair_grrs(d)
    rrs = restrict(g, pair_automorphism(d, g))
    try:
        p = sv_parameters(rrs)
    except FrameMismatch as exc:
        print(f"{text:30} {type(exc).__name__}: {exc}")
        continue
    got = " ".join(fmt(x) for x in p.as_tuple())
    want = expected_sv(d)
    same = want is not None and tuple(want[k] for k in "tpqrs") == p.as_tuple()
    ok = all(check_deformed_axioms(rrs, p).values())
    print(f"{text:30} (t p q r s) = ({got})  table {'agrees' if same else 'differs'}"
          f"  deformed axioms {'hold' if ok else 'fail'}")
