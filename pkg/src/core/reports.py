# Builtin Imports
from dataclasses import dataclass, field

# Local Imports
from src.characters.character_table import character_table
from src.characters.class_functions import ClassFunction
from src.groups.perm_group import PermGroup




# --- Witness encoding ---

def subgroup_json(U: PermGroup) -> list:

    """A subgroup as its list of generator words."""

    return U.generator_words()

def character_json(chi: ClassFunction) -> int:

    """A character as its row index in the table of its group."""

    return character_table(chi.group).index_of(chi)


@dataclass
class Instance:

    """One checked case: the inputs, whether it passed, and its witnesses."""

    inputs: dict
    passed: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"inputs": self.inputs, "pass": self.passed, "witnesses": self.witnesses}


@dataclass
class Report:

    """
    Shared report shape for every verifier.

    Serialized as {theorem, group, formation, instances, summary}; characters
    appear as table-row indices and subgroups as generator lists.
    """

    theorem: str
    group: str
    formation: str = None
    instances: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(instance.passed for instance in self.instances)

    def add(self, inputs: dict, passed: bool, **witnesses) -> Instance:
        instance = Instance(inputs=inputs, passed=bool(passed), witnesses=witnesses)
        self.instances.append(instance)
        return instance

    def summary(self) -> dict:
        passed = sum(1 for i in self.instances if i.passed)
        return {"instances": len(self.instances), "passed": passed, "pass": self.passed, "notes": self.notes}

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "group": self.group,
            "formation": self.formation,
            "instances": [i.to_json() for i in self.instances],
            "summary": self.summary(),
        }

    def status_line(self) -> str:
        mark = "✅" if self.passed else "❌"
        label = f"{self.theorem} {self.group}" + (f" [{self.formation}]" if self.formation else "")
        s = self.summary()
        return f"{mark} {label}: {s['passed']}/{s['instances']} instances pass"
