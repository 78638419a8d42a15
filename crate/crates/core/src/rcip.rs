//! Corner compression (to come).
