//! Library surface of the `ttl` CLI: the polynomial expression parser, the
//! report schema builders, and report verification.

pub mod parser;
pub mod report;
pub mod verify;
