//! Doubly periodic fast summation (to come).
