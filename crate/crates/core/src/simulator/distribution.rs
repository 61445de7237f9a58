use std::collections::BTreeMap;
use std::io::Write;

use rand::distributions::{Distribution as _, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{format_bitstring, parse_bitstring};
use crate::error::{QwalkError, Result};

const SUM_TOLERANCE: f64 = 1e-8;

/// Probability mass over computational basis outcomes, keyed by basis index.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    num_qubits: usize,
    probs: BTreeMap<usize, f64>,
}

impl Distribution {
    /// Builds a distribution from `(bitstring, probability)` pairs, checking
    /// ranges and that the total is one.
    pub fn from_bitstrings<'a, I>(num_qubits: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, f64)>,
    {
        let mut pairs = Vec::new();
        for (bits, p) in entries {
            pairs.push((parse_bitstring(num_qubits, bits)?, p));
        }
        Self::from_pairs(num_qubits, pairs)
    }

    pub fn from_pairs<I>(num_qubits: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, f64)>,
    {
        let dist = Self::from_pairs_unchecked(num_qubits, entries);
        if dist.probs.values().any(|&p| !(0.0..=1.0 + SUM_TOLERANCE).contains(&p)) {
            return Err(QwalkError::NotNormalized(dist.total()));
        }
        if (dist.total() - 1.0).abs() > SUM_TOLERANCE {
            return Err(QwalkError::NotNormalized(dist.total()));
        }
        Ok(dist)
    }

    pub(crate) fn from_pairs_unchecked<I>(num_qubits: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, f64)>,
    {
        let mut probs = BTreeMap::new();
        for (i, p) in entries {
            *probs.entry(i).or_insert(0.0) += p;
        }
        Self { num_qubits, probs }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn probs(&self) -> &BTreeMap<usize, f64> {
        &self.probs
    }

    pub fn get(&self, index: usize) -> f64 {
        self.probs.get(&index).copied().unwrap_or(0.0)
    }

    pub fn get_bits(&self, bitstring: &str) -> Result<f64> {
        Ok(self.get(parse_bitstring(self.num_qubits, bitstring)?))
    }

    pub fn total(&self) -> f64 {
        self.probs.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.values().all(|&p| p == 0.0)
    }

    /// `(bitstring, probability)` in bitstring order.
    pub fn iter_bitstrings(&self) -> impl Iterator<Item = (String, f64)> + '_ {
        self.probs.iter().map(|(&i, &p)| (format_bitstring(i, self.num_qubits), p))
    }

    /// Entries with probability at least `threshold`.
    pub fn support(&self, threshold: f64) -> Vec<usize> {
        self.probs.iter().filter(|(_, &p)| p >= threshold).map(|(&i, _)| i).collect()
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["bitstring", "probability"])?;
        for (bits, p) in self.iter_bitstrings() {
            w.write_record([bits, format!("{p:?}")])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }
}

impl Serialize for Distribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.probs.len()))?;
        for (bits, p) in self.iter_bitstrings() {
            map.serialize_entry(&bits, &p)?;
        }
        map.end()
    }
}

/// Sampled outcome counts from a fixed number of shots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counts {
    num_qubits: usize,
    shots: u64,
    counts: BTreeMap<usize, u64>,
}

impl Counts {
    pub fn shots(&self) -> u64 {
        self.shots
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn get(&self, index: usize) -> u64 {
        self.counts.get(&index).copied().unwrap_or(0)
    }

    pub fn iter_bitstrings(&self) -> impl Iterator<Item = (String, u64)> + '_ {
        self.counts.iter().map(|(&i, &c)| (format_bitstring(i, self.num_qubits), c))
    }

    /// Empirical distribution `count / shots`.
    pub fn to_distribution(&self) -> Distribution {
        let shots = self.shots as f64;
        Distribution::from_pairs_unchecked(self.num_qubits, self.counts.iter().map(|(&i, &c)| (i, c as f64 / shots)))
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["bitstring", "count"])?;
        for (bits, c) in self.iter_bitstrings() {
            w.write_record([bits, c.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }
}

impl Serialize for Counts {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.counts.len()))?;
        for (bits, c) in self.iter_bitstrings() {
            map.serialize_entry(&bits, &c)?;
        }
        map.end()
    }
}

/// Draws `shots` independent outcomes from `dist`; the result depends only on
/// the distribution and `seed`.
pub fn sample(dist: &Distribution, shots: u64, seed: u64) -> Result<Counts> {
    if shots < 1 {
        return Err(QwalkError::NoShots);
    }
    let (outcomes, weights): (Vec<usize>, Vec<f64>) = dist.probs.iter().filter(|(_, &p)| p > 0.0).map(|(&i, &p)| (i, p)).unzip();
    if outcomes.is_empty() {
        return Err(QwalkError::EmptyDistribution);
    }
    let index = WeightedIndex::new(&weights).map_err(|_| QwalkError::EmptyDistribution)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = BTreeMap::new();
    for _ in 0..shots {
        *counts.entry(outcomes[index.sample(&mut rng)]).or_insert(0) += 1;
    }
    Ok(Counts { num_qubits: dist.num_qubits, shots, counts })
}
