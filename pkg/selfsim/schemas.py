from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


Classification = Literal["contracting", "expanding", "indeterminate"]


class ElementModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    rank: int
    nilpotency_class: int = Field(alias="class")
    exponents: list[int]
    normal_form: str | None = None


class BasisEntryModel(BaseModel):
    id: int
    weight: int
    multiweight: list[int]
    generator: int | None = None
    left: int | None = None
    right: int | None = None
    label: str


class SubgroupModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    rank: int
    nilpotency_class: int = Field(alias="class")
    generators: list[ElementModel] = Field(default_factory=list)
    pivots: list[int | None]
    index: int | None = None


class DecompositionModel(BaseModel):
    element: ElementModel
    perm: list[int]
    cycles: str
    states: list[ElementModel]


class PortraitModel(BaseModel):
    depth: int
    perm: list[int]
    children: list["PortraitModel"] = Field(default_factory=list)


class AutomatonStateModel(BaseModel):
    id: int
    element: ElementModel
    perm: list[int]
    children: list[int]


class AutomatonModel(BaseModel):
    alphabet: int
    states: list[AutomatonStateModel] = Field(default_factory=list)
    initial: list[int] = Field(default_factory=list)
    complete: bool = True


class SpectralModel(BaseModel):
    matrix: list[list[str]]
    characteristic_polynomial: str
    coefficients: list[str]
    spectral_radius: float
    exact: bool = False
    classification: Classification


class RepresentationModel(BaseModel):
    alphabet: int
    transversal: list[ElementModel]
    generators: list[DecompositionModel] = Field(default_factory=list)


class StatesModel(BaseModel):
    cutoff_exceeded: bool = False
    cutoff: int | None = None
    states: list[ElementModel] = Field(default_factory=list)


class CountModel(BaseModel):
    """A single counting result together with the arguments that produced it."""

    model_config = ConfigDict(populate_by_name=True)

    quantity: Literal["witt", "multirank", "arn", "distribution", "index_exponent"]
    value: int
    rank: int | None = None
    nilpotency_class: int | None = Field(default=None, alias="class")
    weight: int | None = None
    degree: int | None = None
    parts: list[int] | None = None


class IndexTrialModel(BaseModel):
    trial: int
    index: int | None
    match: bool


class IndexModel(BaseModel):
    formula: int
    trials: list[IndexTrialModel] = Field(default_factory=list)


class ActionModel(BaseModel):
    word: list[int]
    image: list[int]


class WitnessModel(BaseModel):
    witness: list[int] | None = None


class TransitivityModel(BaseModel):
    transitive: bool


class ExampleCheckModel(BaseModel):
    generator: str
    cycles: str
    expected_cycles: str
    states: list[str]
    expected_states: list[str]
    reference_states: list[str]
    perm_ok: bool
    states_ok: bool


class ExampleReportModel(BaseModel):
    checks: list[ExampleCheckModel]
    passed: bool


PortraitModel.model_rebuild()
