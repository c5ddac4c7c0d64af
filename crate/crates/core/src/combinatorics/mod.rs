//! Partitions, tableaux, dimension formulas, Kostka numbers and symmetric
//! group characters. Every other module checks its counts against these.

mod character;
mod partition;
mod tableau;

pub use character::{sym_character, CycleType};
pub use partition::{
    binomial, dim_gl_irrep, dim_sym_irrep, dominance_leq, enumerate_partitions, factorial,
    weak_compositions, Partition,
};
pub use tableau::{kostka, semistandard_tableaux, Tableau};
