//! JSON wire formats.
//!
//! Scalars travel as strings `"p/q"` (or `"p"` when the denominator is
//! one) so payloads stay exact; matrices are row-major nested arrays of
//! such strings; multilinear tables map basis-index keys `"i,j;k,l;..."`
//! to matrices, omitting zero entries. Parsing validates shape
//! invariants (declared order/dim against actual lengths) so malformed
//! input is rejected before any computation runs.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::model::AlgElement;
use crate::model::{Letter, Word};
use crate::ov::distribution::OVDistribution;
use crate::ov::multilinear::MultilinearMap;
use crate::ov::series::MulSeries;
use crate::scalar::{parse_rat, rat_string, Rat};
use crate::series::TruncatedSeries;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MomentsJson {
    pub order: usize,
    pub moments: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CumulantsJson {
    pub order: usize,
    pub cumulants: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgElementJson {
    pub terms: BTreeMap<String, String>,
}

/// One multilinear map: `table` keys name one matrix-unit basis element
/// per slot as `"i,j"`, slots joined by `";"`; the arity-0 map uses the
/// single key `""`. Zero entries are omitted.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    pub arity: usize,
    pub table: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OvMomentsJson {
    pub dim: usize,
    pub order: usize,
    pub moments: Vec<MapJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OvCumulantsJson {
    pub dim: usize,
    pub order: usize,
    pub cumulants: Vec<MapJson>,
}

fn parse_seq(values: &[String], order: usize, what: &str) -> Result<Vec<Rat>> {
    if values.len() != order {
        return Err(Error::InvalidInput(format!(
            "declared order {order} but {} {what} given",
            values.len()
        )));
    }
    if order == 0 {
        return Err(Error::InvalidInput(format!("empty {what}")));
    }
    values.iter().map(|s| parse_rat(s)).collect()
}

fn seq_json(values: &[Rat]) -> Vec<String> {
    values.iter().map(rat_string).collect()
}

pub fn moments_from_json(j: &MomentsJson) -> Result<Vec<Rat>> {
    parse_seq(&j.moments, j.order, "moments")
}

pub fn moments_to_json(m: &[Rat]) -> MomentsJson {
    MomentsJson {
        order: m.len(),
        moments: seq_json(m),
    }
}

pub fn cumulants_from_json(j: &CumulantsJson) -> Result<Vec<Rat>> {
    parse_seq(&j.cumulants, j.order, "cumulants")
}

pub fn cumulants_to_json(b: &[Rat]) -> CumulantsJson {
    CumulantsJson {
        order: b.len(),
        cumulants: seq_json(b),
    }
}

pub fn series_from_json(j: &SeriesJson) -> Result<TruncatedSeries<Rat>> {
    TruncatedSeries::new(parse_seq(&j.coeffs, j.order, "coefficients")?)
}

pub fn series_to_json(s: &TruncatedSeries<Rat>) -> SeriesJson {
    SeriesJson {
        order: s.coeffs().len(),
        coeffs: seq_json(s.coeffs()),
    }
}

/// Words serialize as strings over `{X, Y}`; the empty string is the unit.
fn word_from_string(s: &str) -> Result<Word> {
    s.chars()
        .map(|c| match c {
            'X' => Ok(Letter::X),
            'Y' => Ok(Letter::Y),
            other => Err(Error::InvalidInput(format!("bad letter {other:?}"))),
        })
        .collect()
}

fn word_to_string(w: &[Letter]) -> String {
    w.iter()
        .map(|l| match l {
            Letter::X => 'X',
            Letter::Y => 'Y',
        })
        .collect()
}

pub fn alg_element_from_json(j: &AlgElementJson) -> Result<AlgElement<Rat>> {
    let mut out = AlgElement::zero();
    for (word, coeff) in &j.terms {
        let w = AlgElement::word(word_from_string(word)?);
        out = out.add(&w.scale(&parse_rat(coeff)?));
    }
    Ok(out)
}

pub fn alg_element_to_json(e: &AlgElement<Rat>) -> AlgElementJson {
    AlgElementJson {
        terms: e
            .terms()
            .map(|(w, c)| (word_to_string(w), rat_string(c)))
            .collect(),
    }
}

pub fn matrix_to_json(m: &Matrix<Rat>) -> Vec<Vec<String>> {
    m.rows()
        .into_iter()
        .map(|row| row.iter().map(rat_string).collect())
        .collect()
}

pub fn matrix_from_json(rows: &[Vec<String>], dim: usize) -> Result<Matrix<Rat>> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::InvalidInput(format!(
            "matrix is not {dim}x{dim}"
        )));
    }
    let mut m = Matrix::zero(dim);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            m.set(i, j, parse_rat(s)?);
        }
    }
    Ok(m)
}

fn tuple_key(tuple: &[usize], dim: usize) -> String {
    let parts: Vec<String> = tuple.iter().map(|p| format!("{},{}", p / dim, p % dim)).collect();
    parts.join(";")
}

fn parse_tuple_key(key: &str, dim: usize, arity: usize) -> Result<Vec<usize>> {
    let bad = || Error::InvalidInput(format!("bad basis key {key:?}"));
    if key.is_empty() {
        return if arity == 0 { Ok(vec![]) } else { Err(bad()) };
    }
    let tuple: Vec<usize> = key
        .split(';')
        .map(|pair| {
            let (i, j) = pair.split_once(',').ok_or_else(bad)?;
            let i: usize = i.trim().parse().map_err(|_| bad())?;
            let j: usize = j.trim().parse().map_err(|_| bad())?;
            if i >= dim || j >= dim {
                return Err(bad());
            }
            Ok(i * dim + j)
        })
        .collect::<Result<_>>()?;
    if tuple.len() != arity {
        return Err(Error::InvalidInput(format!(
            "key {key:?} has {} slots, expected {arity}",
            tuple.len()
        )));
    }
    Ok(tuple)
}

pub fn map_to_json(m: &MultilinearMap<Rat>) -> MapJson {
    let table = m
        .entries()
        .filter(|(_, value)| !value.is_zero())
        .map(|(tuple, value)| (tuple_key(&tuple, m.dim()), matrix_to_json(value)))
        .collect();
    MapJson {
        arity: m.arity(),
        table,
    }
}

pub fn map_from_json(j: &MapJson, dim: usize) -> Result<MultilinearMap<Rat>> {
    let mut m = MultilinearMap::zero(dim, j.arity);
    for (key, rows) in &j.table {
        let tuple = parse_tuple_key(key, dim, j.arity)?;
        m.set(&tuple, matrix_from_json(rows, dim)?);
    }
    Ok(m)
}

fn maps_from_json(maps: &[MapJson], dim: usize, order: usize, what: &str) -> Result<Vec<MultilinearMap<Rat>>> {
    if dim == 0 {
        return Err(Error::InvalidInput("dim must be at least 1".into()));
    }
    if maps.len() != order || order == 0 {
        return Err(Error::InvalidInput(format!(
            "declared order {order} but {} {what} given",
            maps.len()
        )));
    }
    maps.iter()
        .enumerate()
        .map(|(n, mj)| {
            if mj.arity != n {
                return Err(Error::InvalidInput(format!(
                    "{what} entry {n} has arity {}, expected {n}",
                    mj.arity
                )));
            }
            map_from_json(mj, dim)
        })
        .collect()
}

pub fn ov_moments_from_json(j: &OvMomentsJson) -> Result<OVDistribution<Rat>> {
    OVDistribution::new(maps_from_json(&j.moments, j.dim, j.order, "moment maps")?)
}

pub fn ov_moments_to_json(d: &OVDistribution<Rat>) -> OvMomentsJson {
    OvMomentsJson {
        dim: d.dim(),
        order: d.order(),
        moments: d.maps().iter().map(map_to_json).collect(),
    }
}

pub fn ov_cumulants_from_json(j: &OvCumulantsJson) -> Result<MulSeries<Rat>> {
    MulSeries::from_components(maps_from_json(&j.cumulants, j.dim, j.order, "cumulant maps")?)
}

pub fn ov_cumulants_to_json(s: &MulSeries<Rat>) -> OvCumulantsJson {
    OvCumulantsJson {
        dim: s.dim(),
        order: s.order(),
        cumulants: s.components().iter().map(map_to_json).collect(),
    }
}
