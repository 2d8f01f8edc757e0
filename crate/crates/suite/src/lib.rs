//! Acceptance suite for magma-lab; see `tests/acceptance.rs`.
