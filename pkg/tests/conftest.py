import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

from bcplus.action import ActionDescription, Form, Signature, CausalLaw, action, exogenous, inertial, regular  # noqa: E402
from bcplus.formula import TOP, Atom, Var  # noqa: E402

ROOT = HERE.parent
PROGRAMS = ROOT / "programs"
DATA = HERE / "data"


def make_sd() -> ActionDescription:
    """One inertial fluent p, one exogenous action a, and a causes p."""
    constants = [regular("p"), action("a")]
    sig = Signature(constants)
    laws = inertial(sig, "p") + exogenous(sig, "a")
    laws.append(CausalLaw(Form.FLUENT_DYNAMIC, Var(Atom("p", "t")), TOP, Var(Atom("a", "t"))))
    return ActionDescription(constants, laws)


@pytest.fixture
def sd():
    return make_sd()
