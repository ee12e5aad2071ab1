from io import StringIO
import pytest
from liftmod.cli import main
from liftmod.misc.report import Report


def call(*argv):
    out = StringIO()
    status = main(list(argv), out)
    return status, out.getvalue()


class TestEval:
    def test_generator(self):
        status, text = call("eval", "a")
        assert status == 0
        assert "[[1, 1, 0],\n [0, 1, 0],\n [0, 0, 1]]" in text
        assert "eps=+1" in text

    def test_kernel_flag(self):
        status, text = call("eval", "(b c)^6")
        assert status == 0 and "in ker Psi" in text

    def test_mod(self):
        status, text = call("eval", "a^3", "--mod", "3")
        assert status == 0 and "[[1, 0, 0]," in text

    @pytest.mark.parametrize("k", ["0", "1"])
    def test_mod_below_two(self, k, capsys):
        status, text = call("eval", "c", "--mod", k)
        assert status == 2 and text == ""
        assert "at least 2" in capsys.readouterr().err

    def test_parse_error(self, capsys):
        status, text = call("eval", "q")
        assert status == 2
        assert "position 0" in capsys.readouterr().err


class TestLift:
    @pytest.mark.parametrize("word, k, verdict", [("c", 2, "not liftable v=(0, 1)"),
        ("c^2", 2, "liftable v=(0, 2)"), ("i", 7, "liftable v=(0, 0)")])
    def test_verdicts(self, word, k, verdict):
        status, text = call("lift", word, "--k", str(k))
        assert status == 0 and text.startswith(verdict)

    def test_bad_k(self):
        assert call("lift", "a", "--k", "1")[0] == 2


class TestVerify:
    def test_braid_chain(self):
        status, text = call("verify", "--suite", "braid-chain")
        assert status == 0 and "script:bc-c2b" in text

    def test_alias_eq2(self):
        status, text = call("verify", "--suite", "eq2")
        assert status == 0 and "script:bc-c2b" in text

    @pytest.mark.parametrize("name", ["eq1", "prop42", "paper-matrices"])
    def test_aliases(self, name):
        assert call("verify", "--suite", name)[0] == 0

    def test_kernel_json(self):
        status, text = call("verify", "--suite", "kernel", "--window", "5", "--format", "json")
        assert status == 0
        r = Report.parse(text)
        assert r.counts == {"pass": 122, "fail": 0, "skip": 0}

    def test_closed_forms(self):
        assert call("verify", "--suite", "closed-forms")[0] == 0

    def test_reductions_bad_k(self):
        assert call("verify", "--suite", "reductions", "--k", "4")[0] == 2

    def test_unknown_suite(self):
        with pytest.raises(SystemExit):
            call("verify", "--suite", "nonsense")


class TestTables:
    def test_gens_reduced(self):
        status, text = call("gens", "--k", "2", "--reduced")
        lines = text.splitlines()
        assert status == 0 and len(lines) == 4
        assert [l.split()[1] for l in lines] == ["a", "b", "c^2", "i"]

    def test_gens_reduced_bad_k(self):
        assert call("gens", "--k", "4", "--reduced")[0] == 2

    def test_gens(self):
        status, text = call("gens", "--k", "3")
        assert status == 0 and len(text.splitlines()) == 9
        assert "lifts: False" not in text

    def test_index(self):
        assert call("index", "--k", "3") == (0, "9\n")

    def test_index_reps(self):
        status, text = call("index", "--k", "2", "--reps")
        lines = text.splitlines()
        assert status == 0 and lines[0] == "4" and len(lines) == 5
        assert call("-v", "index", "--k", "2") == (0, "4\n")

    def test_maximal(self):
        status, text = call("maximal", "--k-range", "2..6", "--quiet")
        lines = text.splitlines()
        assert status == 0 and len(lines) == 5
        assert ["maximal=True" in l for l in lines] == [True, True, False, True, False]

    def test_maximal_json(self):
        status, text = call("maximal", "--k-range", "4", "--format", "json", "--quiet")
        assert status == 0 and '"maximal": false' in text and '"divisor": 2' in text

    def test_version(self, capsys):
        with pytest.raises(SystemExit):
            main(["--version"])
        assert "liftmod 0.1.dev" in capsys.readouterr().out
