//! Measured statistics of the cipher: avalanche effect, byte-histogram
//! uniformity, and the nominal permutation key space. Everything here is
//! measurement, not assertion: the harness reports what the construction
//! actually does.

use crate::topology::{encrypt_symbols, KeyPair, SplitMix64};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("sequences differ in length: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("need at least {needed} bytes for the byte histogram, got {got}")]
    InsufficientData { needed: usize, got: usize },
}

/// Number of differing bits between two equal-length byte sequences.
pub fn hamming(a: &[u8], b: &[u8]) -> Result<u64, AnalysisError> {
    if a.len() != b.len() {
        return Err(AnalysisError::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter()
        .zip(b)
        .map(|(&x, &y)| u64::from((x ^ y).count_ones()))
        .sum())
}

/// Message length used by the avalanche harness.
pub const AVALANCHE_MESSAGE_LEN: usize = 64;

/// Mean and spread of ciphertext bit flips caused by single input-bit
/// flips.
#[derive(Debug, Clone, PartialEq)]
pub struct AvalancheReport {
    pub mean_bits: f64,
    pub stddev_bits: f64,
    pub trials: u64,
}

/// Runs `trials` single-bit-flip experiments on random 64-byte messages.
/// Without chaining the distance is taken over the affected byte alone
/// (the construction is per-symbol, so no other byte can change); with
/// chaining it is taken over the whole message. Each trial draws its
/// message and flip position from a SplitMix64 stream seeded with
/// `seed + trial`, so the report is reproducible and trial order is
/// irrelevant.
pub fn avalanche_ratio(key: &KeyPair, chain: bool, trials: u64, seed: u64) -> AvalancheReport {
    avalanche_ratio_with_len(key, chain, trials, seed, AVALANCHE_MESSAGE_LEN)
}

/// [`avalanche_ratio`] with an explicit message length.
pub fn avalanche_ratio_with_len(
    key: &KeyPair,
    chain: bool,
    trials: u64,
    seed: u64,
    message_len: usize,
) -> AvalancheReport {
    assert!(trials >= 1, "at least one trial required");
    assert!(message_len >= 1, "messages must be non-empty");
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for trial in 0..trials {
        let mut rng = SplitMix64::new(seed.wrapping_add(trial));
        let mut message = vec![0u8; message_len];
        for byte in &mut message {
            *byte = rng.next_u64() as u8;
        }
        let bit = (rng.next_u64() % (message_len as u64 * 8)) as usize;
        let (byte_index, bit_index) = (bit / 8, bit % 8);
        let mut flipped = message.clone();
        flipped[byte_index] ^= 1 << bit_index;

        let c1 = encrypt_symbols(&message, key, chain);
        let c2 = encrypt_symbols(&flipped, key, chain);
        let distance = if chain {
            hamming(&c1, &c2).expect("ciphertexts have equal length") as f64
        } else {
            f64::from((c1[byte_index] ^ c2[byte_index]).count_ones())
        };
        sum += distance;
        sum_sq += distance * distance;
    }
    let n = trials as f64;
    let mean = sum / n;
    let variance = (sum_sq / n - mean * mean).max(0.0);
    AvalancheReport {
        mean_bits: mean,
        stddev_bits: variance.sqrt(),
        trials,
    }
}

/// Minimum sample for the histogram: ten expected observations per bucket.
pub const CHI_SQUARE_MIN_LEN: usize = 2560;

/// Chi-square statistic of a byte histogram against the uniform
/// distribution, 256 buckets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquare {
    pub statistic: f64,
    pub df: u32,
}

pub fn chi_square_uniformity(data: &[u8]) -> Result<ChiSquare, AnalysisError> {
    if data.len() < CHI_SQUARE_MIN_LEN {
        return Err(AnalysisError::InsufficientData {
            needed: CHI_SQUARE_MIN_LEN,
            got: data.len(),
        });
    }
    let mut counts = [0u64; 256];
    for &byte in data {
        counts[byte as usize] += 1;
    }
    let expected = data.len() as f64 / 256.0;
    let statistic = counts
        .iter()
        .map(|&count| {
            let d = count as f64 - expected;
            d * d / expected
        })
        .sum();
    Ok(ChiSquare { statistic, df: 255 })
}

/// Bits of the nominal (n!)² key space of a twist-key pair, by direct log
/// summation, so no factorial is ever materialized. Note that derived keys
/// realize far fewer: each twist collapses to a 64-bit seed.
pub fn keyspace_bits(n: u32) -> f64 {
    2.0 * (2..=n).map(|i| f64::from(i).log2()).sum::<f64>()
}

/// Aggregate measurement block printed by the analyze command.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub avalanche: AvalancheReport,
    pub chi_square: ChiSquare,
    pub keyspace_bits: f64,
}

impl AnalysisReport {
    /// Stable line-oriented `key=value` rendering.
    pub fn to_text(&self) -> String {
        format!(
            "avalanche_mean={:.6}\navalanche_stddev={:.6}\nchi_square={:.6}\nchi_square_df={}\nkeyspace_bits={:.6}\ntrials={}\n",
            self.avalanche.mean_bits,
            self.avalanche.stddev_bits,
            self.chi_square.statistic,
            self.chi_square.df,
            self.keyspace_bits,
            self.avalanche.trials,
        )
    }
}
