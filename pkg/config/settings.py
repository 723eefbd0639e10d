"""
Parity Groups Verifier Configuration Settings
Holds every enumeration cap and numeric tolerance using Pydantic BaseSettings
"""
from typing import Any, Literal, Tuple

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource


class Settings(BaseSettings):
    """
    Verifier settings with the documented defaults.

    Values come only from keyword arguments and CLI flags. Environment
    variables and dotenv files are not read.
    """

    # =============================================================================
    # DEGREE AND ENUMERATION CAPS
    # =============================================================================

    # Signed permutation constructors
    max_degree: int = Field(
        default=12,
        description="Largest degree accepted by SignedPermutation constructors",
        ge=1, le=64
    )

    # Full P_n enumeration and kernels
    enumeration_max_n: int = Field(
        default=8,
        description="Largest n for which P_n and its parity kernels are enumerated",
        ge=1, le=12
    )

    closure_cap: int = Field(
        default=10_000_000,
        description="Maximum number of elements produced by a generator closure",
        ge=1
    )

    jp_cap: int = Field(
        default=1_000_000,
        description="Maximum order of an enumerated abstract parity group JP_n",
        ge=1
    )

    candidate_cap: int = Field(
        default=1_000_000,
        description="Maximum number of candidate based automorphisms of a quotient complex",
        ge=1
    )

    isomorphism_cap: int = Field(
        default=5000,
        description="Largest group order handed to the isomorphism search",
        ge=1
    )

    homomorphism_pair_cap: int = Field(
        default=100_000,
        description="Above this many pairs homomorphism laws are sampled instead of exhaustive",
        ge=1
    )

    # =============================================================================
    # ABELIAN QUOTIENTS AND COMPLEXES
    # =============================================================================

    z2_max_n: int = Field(default=20, description="Largest length for Z2 vector checks", ge=1, le=24)

    quotient_max_blocks: int = Field(
        default=20,
        description="Largest block count m for quotient group tables",
        ge=1, le=24
    )

    complex_max_n: int = Field(
        default=10,
        description="Largest degree (and block count) of a quotient lattice complex",
        ge=1, le=16
    )

    # =============================================================================
    # LIE ALGEBRAS AND UNITARY DECOMPOSITION
    # =============================================================================

    lie_max_n: int = Field(default=8, description="Largest matrix size for bracket closure", ge=1, le=12)

    unitary_max_n: int = Field(default=16, description="Largest size of a random unitary", ge=1, le=64)

    reconstruction_tol: float = Field(
        default=1e-9,
        description="Frobenius tolerance for U - O1 diag(e^{i theta}) O2",
        gt=0
    )

    orthogonality_tol: float = Field(
        default=1e-10,
        description="Tolerance for |O^T O - I| on decomposition factors",
        gt=0
    )

    unitarity_tol: float = Field(
        default=1e-10,
        description="Tolerance for |U* U - I| accepted on decomposition input",
        gt=0
    )

    random_unitary_tol: float = Field(
        default=1e-12,
        description="Unitarity guaranteed for generated random unitaries",
        gt=0
    )

    eigen_cluster_gap: float = Field(
        default=1e-8,
        description="Argument gap separating eigenvalue clusters of U^T U",
        gt=0
    )

    # =============================================================================
    # RANDOMISED CHECKS
    # =============================================================================

    random_checks: int = Field(
        default=1000,
        description="Number of randomised cases in chart and algebra checks",
        ge=1, le=1_000_000
    )

    default_seed: int = Field(
        default=20240101,
        description="Seed used when no --seed flag is given",
        ge=0, le=2**64 - 1
    )

    # =============================================================================
    # LOGGING CONFIGURATION
    # =============================================================================

    log_level: str = Field(default="WARNING", description="Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)")
    log_format: Literal["text", "json"] = Field(default="text", description="Diagnostics format on standard error")

    # =============================================================================
    # CONFIGURATION
    # =============================================================================

    model_config = {
        "case_sensitive": False,
        "extra": "ignore",
        "validate_assignment": True,  # CLI overrides are validated on assignment
    }

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        # flags only
        return (init_settings,)


# Create global settings instance
settings = Settings()

_DEFAULTS = settings.model_dump()


def get_settings() -> Settings:
    """Return the shared settings instance."""
    return settings


def apply_overrides(**overrides: Any) -> Settings:
    """
    Assign CLI overrides onto the shared settings instance.

    None values are skipped so argparse defaults do not clobber settings.
    Raises pydantic.ValidationError on out-of-range values.
    """
    for key, value in overrides.items():
        if value is None:
            continue
        if key not in Settings.model_fields:
            raise KeyError(f"Unknown setting: {key}")
        setattr(settings, key, value)
    return settings


def reset_settings() -> Settings:
    """Restore every field to its documented default."""
    for key, value in _DEFAULTS.items():
        setattr(settings, key, value)
    return settings
