from typing import List

from pydantic import BaseModel, Field


class BudgetConfig(BaseModel):
    coloring_leaves: int = Field(default=10**8, gt=0)
    list_coloring_leaves: int = Field(default=10**8, gt=0)
    assignment_evaluations: int = Field(default=10**7, gt=0)
    deletion_contraction_max_edges: int = Field(default=24, gt=0)
    forest_sample_cap: int = Field(default=10**4, gt=0)


class SearchDefaults(BaseModel):
    restarts: int = Field(default=4, ge=1)
    iterations: int = Field(default=200, ge=0)
    seed: int = 0


class VerifyDefaults(BaseModel):
    # sample points for the Q bounds, as offsets from m
    x_offsets: List[int] = Field(default_factory=lambda: [-1, 0, 5])
    lemma42_samples: int = Field(default=200, ge=0)
    seed: int = 0


class ConfigModel(BaseModel):
    version: int = 1
    budgets: BudgetConfig = Field(default_factory=BudgetConfig)
    search: SearchDefaults = Field(default_factory=SearchDefaults)
    verify: VerifyDefaults = Field(default_factory=VerifyDefaults)
    workers: int = Field(default=1, ge=1)
