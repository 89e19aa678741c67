//! Graded Betti numbers of monomial ideals.

mod bigatti;
mod ek;
mod graph;
mod koszul;
mod quotient;
mod table;

pub use bigatti::betti_bigatti;
pub use ek::betti_ek;
pub use graph::{betti_quadratic_graph, gamma_graph, graph_table, PolarGraph, Vertex};
pub use koszul::{betti_koszul, betti_koszul_auto, FieldMode};
pub use quotient::betti_cyclic_quotient;
pub use table::{BettiTable, Convention};

use crate::error::Result;
use crate::ideal::MonomialIdeal;

/// Selectable Betti engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BettiMethod {
    EliahouKervaire,
    Bigatti,
    Graph,
    Koszul(FieldMode),
}

impl BettiMethod {
    pub fn name(&self) -> &'static str {
        match self {
            BettiMethod::EliahouKervaire => "ek",
            BettiMethod::Bigatti => "bigatti",
            BettiMethod::Graph => "graph",
            BettiMethod::Koszul(FieldMode::Exact) => "koszul-exact",
            BettiMethod::Koszul(FieldMode::DualPrime) => "koszul-dual-prime",
        }
    }
}

pub fn betti(ideal: &MonomialIdeal, method: BettiMethod) -> Result<BettiTable> {
    match method {
        BettiMethod::EliahouKervaire => betti_ek(ideal),
        BettiMethod::Bigatti => betti_bigatti(ideal),
        BettiMethod::Graph => graph_table(ideal),
        BettiMethod::Koszul(mode) => betti_koszul(ideal, mode),
    }
}

/// `max { j - i : beta_{i,j} != 0 }`.
pub fn regularity(table: &BettiTable) -> Result<u32> {
    table.regularity()
}
