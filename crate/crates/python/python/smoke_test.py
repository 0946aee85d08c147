"""Quick check of the sfw extension module. Run after `maturin develop` or installing the wheel."""

import json

import sfw


def main():
    s3 = sfw.Group(3, ["(0 1)", "(0 1 2)"])
    s2 = sfw.Group.from_json('{"degree": 3, "generators_cycles": ["(0 1)"]}')
    assert s3.order == 6 and len(s2) == 2
    assert s2.is_subgroup_of(s3) and s3.contains("(0 2)")

    assert sfw.index(s3, s2) == 3
    assert sfw.double_coset_count(s3, s2) == 2

    table = json.loads(sfw.character_table(s3))
    assert table["degrees"] == [1, 1, 2]

    g = json.loads(sfw.graph(s3, s2))
    assert len(g["even"]) + len(g["odd"]) == 5 and len(g["edges"]) == 4
    assert abs(g["norm_squared"] - 3) < 1e-6
    assert sfw.graph(s3, s2, dual=True, dot=True).startswith("graph dual_principal {")

    for side in ("in-g", "in-h"):
        a = sfw.commutant_dim(s3, s2, s2, 1, side)
        b = sfw.commutant_dim(s3, s2, s2, 1, side, oracle=True)
        assert a == b, (side, a, b)

    assert sfw.spectrum(2.0)[:2] == ("discrete", 4)
    assert sfw.spectrum(3.5)[0] == "not-in-spectrum"
    assert sfw.spectrum(4.7)[0] == "continuous"
    assert abs(sfw.jones_value(6) - 3.0) < 1e-12
    assert sfw.virtual_index(3, [(1, 1, 2), (1, 2, 3)]) == 15

    a4 = sfw.Group.named("A4")
    assert sfw.out_order(a4) == 2
    ext = json.loads(sfw.extension(a4))
    assert (ext["order"], ext["index"]) == (24, 2)
    assert ext["fingerprint"] == {"1": 1, "2": 9, "3": 8, "4": 6}

    report = json.loads(sfw.verify("arithmetic"))
    assert report["failures"] == []

    try:
        sfw.virtual_index(3, [(1, 2, 5)])
    except sfw.SfwError as e:
        message, code = e.args
        assert code == 3, e.args
    else:
        raise AssertionError("constraint not enforced")

    try:
        sfw.Group(3, ["(0 x)"])
    except sfw.SfwError as e:
        assert e.args[1] == 2
    else:
        raise AssertionError("bad cycle accepted")

    print("smoke test ok")


if __name__ == "__main__":
    main()
