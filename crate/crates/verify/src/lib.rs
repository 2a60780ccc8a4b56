//! Holds the `acceptance` test target; run it with
//! `cargo test -p monopow-verify --test acceptance`.
