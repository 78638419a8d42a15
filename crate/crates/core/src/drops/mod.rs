//! Drops (to come).
