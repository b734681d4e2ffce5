"""Enumeration bounds for the invariant suites.

Each profile fixes how far every exhaustive check reaches.  ``full``
carries the acceptance bounds; ``quick`` keeps every property but shrinks
its window so the whole suite runs in seconds.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class VerifyProfile:
    """Window sizes for one run of the invariant suites."""

    name: str
    pair_codes: int
    """Codes checked by unpair-then-pair."""

    pair_window: int
    """Side of the square checked by pair-then-unpair."""

    diagonals: int
    sigma_ground: int
    """Largest element of the sets checked by the sigma round trip."""

    sigma_max_size: int
    codec_ground: int
    codec_codes: int
    codec_window: int
    appendix_samples: int
    partition_max: int
    tree_max_leaves: int
    chain_codes: int
    theta_sets: int
    """Canonical sets on which the literal and bucketed rows must agree."""

    injective_sets: int
    calibration_sets: int
    height_max: int
    subset_instances: int
    subset_ground_size: int
    seed: int = 0


PROFILES: dict[str, VerifyProfile] = {
    profile.name: profile
    for profile in (
        VerifyProfile(
            name="quick",
            pair_codes=2_000,
            pair_window=40,
            diagonals=50,
            sigma_ground=8,
            sigma_max_size=4,
            codec_ground=7,
            codec_codes=1_000,
            codec_window=15,
            appendix_samples=100,
            partition_max=6,
            tree_max_leaves=4,
            chain_codes=500,
            theta_sets=300,
            injective_sets=500,
            calibration_sets=300,
            height_max=12,
            subset_instances=10,
            subset_ground_size=8,
        ),
        VerifyProfile(
            name="full",
            pair_codes=100_000,
            pair_window=300,
            diagonals=200,
            sigma_ground=12,
            sigma_max_size=6,
            codec_ground=10,
            codec_codes=10_000,
            codec_window=50,
            appendix_samples=1_000,
            partition_max=8,
            tree_max_leaves=5,
            chain_codes=10_000,
            theta_sets=5_000,
            injective_sets=5_000,
            calibration_sets=2_000,
            height_max=30,
            subset_instances=100,
            subset_ground_size=12,
        ),
    )
}
