//! Wall solver (to come).
