import pytest
import yaml
from click.testing import CliRunner

from stackgame.cli import main
from stackgame.documents import bundled_text, example_instance, parse_document, parse_instance
from stackgame.errors import ParseError
from stackgame.model import AttackVector
from stackgame.solver import solve


def run(*args):
    return CliRunner().invoke(main, list(args))


@pytest.fixture
def perturbed(tmp_path):
    def make(cost):
        text = bundled_text().replace('cost_attacker: "-5"', f'cost_attacker: "{cost}"')
        path = tmp_path / f"perturbed{cost}.yaml"
        path.write_text(text)
        return str(path)
    return make


def test_solve_e8():
    r = run("solve", "--attack", "e8")
    assert r.exit_code == 0, r.output
    doc = yaml.safe_load(r.output)
    assert doc["regime"] == "Positive"
    assert doc["defense"]["exact"] == ["0"] * 7 + ["1"]
    assert doc["defender_payoff"]["exact"] == "3"
    assert doc["attacker_payoff"]["exact"] == "5"


def test_solve_deterministic():
    a, b = run("solve", "--attack", "uniform"), run("solve", "--attack", "uniform")
    assert a.exit_code == 0
    assert a.output == b.output


def test_attacker_bounds():
    r = run("attacker-bounds")
    assert r.exit_code == 0, r.output
    doc = yaml.safe_load(r.output)
    assert doc["extrema"]["min"]["value"]["exact"] == "-13/5"
    assert doc["extrema"]["min"]["attack"]["exact"][6:] == ["14/15", "1/15"]
    assert doc["extrema"]["max"]["value"]["exact"] == "3"
    assert doc["extrema"]["max"]["attack"]["exact"][4] == "9/10"
    assert doc["exceeds_threshold"] is False
    assert doc["threshold"]["exact"] == "5"


def test_validate_example():
    r = run("validate")
    assert r.exit_code == 0
    doc = yaml.safe_load(r.output)
    assert doc["feasible"] is True
    assert doc["anchor_omega_identity"]["exact"] == "-1"


@pytest.mark.parametrize("cost", ["-4", "-6"])
def test_validate_perturbed_exits_one(perturbed, cost):
    r = run("--instance", perturbed(cost), "validate")
    assert r.exit_code == 1
    doc = yaml.safe_load(r.output)
    assert doc["feasible"] is False
    assert any("sum condition two" in f for f in doc["failures"])


def test_solve_on_infeasible_exits_one(perturbed):
    r = run("--instance", perturbed("-4"), "solve", "--attack", "e8")
    assert r.exit_code == 1
    assert "infeasible" in r.output


def test_region_exports(tmp_path):
    plot, table = tmp_path / "r.svg", tmp_path / "r.csv"
    r = run("region", "--plot", str(plot), "--table", str(table))
    assert r.exit_code == 0, r.output
    doc = yaml.safe_load(r.output)
    assert doc["pareto"] == ["p5"]
    assert plot.read_text().startswith("<svg")
    assert table.read_text().splitlines()[0] == "index,label,pi_b1,pi_b2,on_hull,pareto"


def test_allocate(tmp_path):
    out = tmp_path / "m.csv"
    r = run("allocate", "--resources", "3", "--anchor-prob", "1/2", "--output", str(out))
    assert r.exit_code == 0, r.output
    doc = yaml.safe_load(r.output)
    assert doc["valid"] is True
    assert doc["matrix"][0] == ["1/6"] * 3
    assert out.read_text().startswith("asset,S1,S2,S3\n")


def test_allocate_bad_prob():
    assert run("allocate", "--resources", "3", "--anchor-prob", "3/2").exit_code == 2
    assert run("allocate", "--resources", "0", "--anchor-prob", "1/2").exit_code == 2


def test_selftest():
    r = run("selftest")
    assert r.exit_code == 0
    assert "39/39 checks passed" in r.output
    assert "FAIL" not in r.output


def test_echo_round_trip():
    r = run("echo")
    assert r.exit_code == 0
    assert parse_instance(r.output) == example_instance()


def test_parse_errors(tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text(bundled_text().replace('reward_defender: "8"', 'reward_defender: "1/0"'))
    r = run("--instance", str(bad), "validate")
    assert r.exit_code == 2
    assert "assets[1].reward_defender" in r.output

    one = tmp_path / "one.yaml"
    one.write_text('assets:\n  - {name: a, reward_defender: 1, cost_defender: 1, reward_attacker: 1, cost_attacker: 1}\n')
    r = run("--instance", str(one), "validate")
    assert r.exit_code == 2
    assert "at least 2" in r.output

    assert run("--instance", str(tmp_path / "missing.yaml"), "validate").exit_code == 2
    assert run("solve", "--attack", "e9").exit_code == 2
    assert run("solve", "--attack", "1,2").exit_code == 2


def test_parse_document_names_field():
    with pytest.raises(ParseError, match=r"assets\[2\]\.cost_attacker"):
        parse_document(bundled_text().replace('cost_attacker: "0"', 'cost_attacker: "x"', 1))


def test_anchor_option():
    r = run("--anchor", "T5", "echo")
    assert r.exit_code == 0
    doc = yaml.safe_load(r.output)
    assert doc["assets"][-1]["name"] == "T5"
    v = run("--anchor", "T5", "validate")
    assert v.exit_code == 1
    assert run("--anchor", "nope", "validate").exit_code == 2


def test_attack_file_batch(tmp_path):
    attacks = tmp_path / "attacks.txt"
    attacks.write_text("e8\ne5\n# comment\nuniform\n")
    serial = run("solve", "--attack-file", str(attacks))
    parallel = run("solve", "--attack-file", str(attacks), "--workers", "2")
    via_attack = run("solve", "--attack", str(attacks))
    assert serial.exit_code == 0, serial.output
    assert serial.output == parallel.output == via_attack.output
    docs = yaml.safe_load(serial.output)
    uniform = solve(example_instance(), AttackVector.uniform(8)).regime.value
    assert [d["regime"] for d in docs] == ["Positive", "Negative", uniform]


def test_instance_attack_entry(tmp_path):
    doc = tmp_path / "with_attack.yaml"
    doc.write_text(bundled_text() + "attack: [0, 0, 0, 0, 1, 0, 0, 0]\n")
    r = run("--instance", str(doc), "solve")
    assert r.exit_code == 0, r.output
    assert yaml.safe_load(r.output)["regime"] == "Negative"
    assert run("solve").exit_code == 2
