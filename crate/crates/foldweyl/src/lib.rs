//! Exact-arithmetic engine for twisted loop algebras obtained by
//! diagram-automorphism folding, the associated Drinfeld-tuple monoids, and
//! dimensions/characters of (twisted) Weyl modules, with a brute-force
//! cyclic-module oracle for independent verification at small rank.

pub mod exact;
pub mod rootdata;
pub mod chevalley;
pub mod folding;
pub mod looptrunc;
pub mod drinfeld;
pub mod weylchar;
pub mod oracle;
pub mod suite;
pub mod linalg;
