//! Combinatorial Hom/Ext bases against the numeric oracle on all string pairs.

use rayon::prelude::*;
use serde::Serialize;

use crate::homext::{ext1_basis, hom_basis};
use crate::quiver::BoundQuiver;
use crate::strings::{enumerate_strings, StringWord};

use super::field::Field;
use super::{ext1_dim_numeric, hom_dim_numeric, matrix_rep};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub kind: &'static str,
    pub first: String,
    pub second: String,
    pub combinatorial: usize,
    pub numeric: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub prime: u64,
    pub strings: usize,
    pub pairs: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrosscheckReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `|hom_basis|` and `|ext1_basis|` with the numeric dimensions for
/// every ordered pair of strings of length at most `max_len`.
pub fn crosscheck(f: &Field, q: &BoundQuiver, max_len: usize) -> CrosscheckReport {
    let ws: Vec<StringWord> = enumerate_strings(q, max_len).into_iter().collect();
    let reps: Vec<_> = ws.iter().map(|w| matrix_rep(q, w)).collect();
    let mismatches: Vec<Mismatch> = (0..ws.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let (ws, reps) = (&ws, &reps);
            (0..ws.len()).flat_map(move |j| {
                let mut out = Vec::new();
                let pair = |kind, c, n| Mismatch {
                    kind,
                    first: ws[i].display(q).to_string(),
                    second: ws[j].display(q).to_string(),
                    combinatorial: c,
                    numeric: n,
                };
                let (hc, hn) = (hom_basis(q, &ws[i], &ws[j]).len(), hom_dim_numeric(f, q, &reps[i], &reps[j]));
                if hc != hn {
                    out.push(pair("hom", hc, hn));
                }
                let (ec, en) = (ext1_basis(q, &ws[i], &ws[j]).dim(), ext1_dim_numeric(f, q, &reps[i], &reps[j]));
                if ec != en {
                    out.push(pair("ext1", ec, en));
                }
                out
            })
        })
        .collect();
    CrosscheckReport { prime: f.prime(), strings: ws.len(), pairs: ws.len() * ws.len(), mismatches }
}
