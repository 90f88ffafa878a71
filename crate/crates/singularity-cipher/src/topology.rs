//! Position-dependent twist permutations over the byte alphabet.
//!
//! A twist combines three invertible stages: a positional modular shift, a
//! keyed substitution table, and a bit reversal gated on position parity.
//! Two independently keyed twists applied in sequence form the cipher;
//! decryption undoes the stages in reverse order.
//!
//! Key material is derived deterministically from a passphrase through
//! FNV-1a and SplitMix64 feeding a Fisher–Yates shuffle, so the same
//! passphrase reproduces the same keys on any platform. The derivation is
//! chosen for bit-exact reproducibility, not for strength: the whole key
//! schedule collapses to a 64-bit seed per twist.

use thiserror::Error;

const FNV_OFFSET_BASIS: u64 = 0xcbf29ce484222325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01B3;
const SPLITMIX_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KeyError {
    #[error("passphrase must not be empty")]
    EmptyPassphrase,
}

/// FNV-1a 64-bit hash of a byte sequence.
pub fn fnv1a64(data: &[u8]) -> u64 {
    let mut hash = FNV_OFFSET_BASIS;
    for &byte in data {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(FNV_PRIME);
    }
    hash
}

/// One SplitMix64 step: returns the advanced state and the mixed output.
pub fn splitmix64_next(state: u64) -> (u64, u64) {
    let state = state.wrapping_add(SPLITMIX_GAMMA);
    let mut z = state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    (state, z ^ (z >> 31))
}

/// Deterministic SplitMix64 output stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        let (state, output) = splitmix64_next(self.state);
        self.state = state;
        output
    }
}

/// A bijection on the 256 byte values with its precomputed inverse.
#[derive(Clone, PartialEq, Eq)]
pub struct Permutation {
    table: [u8; 256],
    inverse: [u8; 256],
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Permutation({:?}...)", &self.table[..4])
    }
}

impl Permutation {
    pub fn identity() -> Self {
        let mut table = [0u8; 256];
        for (i, entry) in table.iter_mut().enumerate() {
            *entry = i as u8;
        }
        Self {
            table,
            inverse: table,
        }
    }

    fn from_table(table: [u8; 256]) -> Self {
        let mut inverse = [0u8; 256];
        for (x, &y) in table.iter().enumerate() {
            inverse[y as usize] = x as u8;
        }
        Self { table, inverse }
    }

    pub fn table(&self) -> &[u8; 256] {
        &self.table
    }

    pub fn inverse(&self) -> &[u8; 256] {
        &self.inverse
    }

    #[inline]
    pub fn apply(&self, x: u8) -> u8 {
        self.table[x as usize]
    }

    #[inline]
    pub fn unapply(&self, y: u8) -> u8 {
        self.inverse[y as usize]
    }
}

/// Derives a permutation from `seed`: a Fisher–Yates shuffle of the
/// identity table driven by the SplitMix64 stream. Same seed, same table.
pub fn derive_permutation(seed: u64) -> Permutation {
    shuffled(&mut SplitMix64::new(seed))
}

fn shuffled(rng: &mut SplitMix64) -> Permutation {
    let mut table = [0u8; 256];
    for (i, entry) in table.iter_mut().enumerate() {
        *entry = i as u8;
    }
    for i in (1..table.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        table.swap(i, j);
    }
    Permutation::from_table(table)
}

/// Domain separator appended to the passphrase, one per twist slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistDomain {
    First,
    Second,
}

impl TwistDomain {
    fn tag(self) -> u8 {
        match self {
            TwistDomain::First => 1,
            TwistDomain::Second => 2,
        }
    }
}

/// Parameters of one twist: the substitution table, the positional stride
/// and offset of the shift stage, and the orientation phase gating the bit
/// reversal. Derived strides are always odd so that a constant input still
/// sweeps every shift residue as the position advances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistKey {
    pub perm: Permutation,
    pub stride: u8,
    pub offset: u8,
    pub phase: u8,
}

impl TwistKey {
    /// Key whose twist is the identity map at position 0.
    pub fn identity() -> Self {
        Self {
            perm: Permutation::identity(),
            stride: 1,
            offset: 0,
            phase: 0,
        }
    }
}

/// Derives one twist key. The stream seed is the FNV-1a hash of the
/// passphrase with the domain tag appended; the permutation shuffle
/// consumes the stream first, then three further outputs set the stride
/// (lowest bit forced to 1), the offset and the phase.
pub fn derive_key(passphrase: &[u8], domain: TwistDomain) -> Result<TwistKey, KeyError> {
    if passphrase.is_empty() {
        return Err(KeyError::EmptyPassphrase);
    }
    let mut seed_input = passphrase.to_vec();
    seed_input.push(domain.tag());
    let mut rng = SplitMix64::new(fnv1a64(&seed_input));
    let perm = shuffled(&mut rng);
    let stride = (rng.next_u64() % 256) as u8 | 1;
    let offset = (rng.next_u64() % 256) as u8;
    let phase = (rng.next_u64() % 2) as u8;
    Ok(TwistKey {
        perm,
        stride,
        offset,
        phase,
    })
}

/// The two twist keys forming one cipher key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyPair {
    pub k1: TwistKey,
    pub k2: TwistKey,
}

impl KeyPair {
    pub fn from_passphrase(passphrase: &[u8]) -> Result<Self, KeyError> {
        Ok(Self {
            k1: derive_key(passphrase, TwistDomain::First)?,
            k2: derive_key(passphrase, TwistDomain::Second)?,
        })
    }

    /// Both twists degenerate to the identity at position 0.
    pub fn identity() -> Self {
        Self {
            k1: TwistKey::identity(),
            k2: TwistKey::identity(),
        }
    }
}

/// Reverses the bit order of a byte. Involution.
#[inline]
pub fn bitreverse8(x: u8) -> u8 {
    x.reverse_bits()
}

#[inline]
fn positional_shift(position: usize, key: &TwistKey) -> u8 {
    (position as u8)
        .wrapping_mul(key.stride)
        .wrapping_add(key.offset)
}

#[inline]
fn flip_gate(position: usize, key: &TwistKey) -> bool {
    position.wrapping_add(key.phase as usize) & 1 == 1
}

/// Applies one twist to a symbol: shift by `position·stride + offset`
/// (mod 256), substitute, then reverse the bits when `position + phase`
/// is odd. A bijection on bytes for every fixed position.
#[inline]
pub fn twist_forward(x: u8, position: usize, key: &TwistKey) -> u8 {
    let z = key.perm.apply(x.wrapping_add(positional_shift(position, key)));
    if flip_gate(position, key) {
        bitreverse8(z)
    } else {
        z
    }
}

/// Exact stage-by-stage inverse of [`twist_forward`].
#[inline]
pub fn twist_inverse(z: u8, position: usize, key: &TwistKey) -> u8 {
    let z = if flip_gate(position, key) {
        bitreverse8(z)
    } else {
        z
    };
    key.perm
        .unapply(z)
        .wrapping_sub(positional_shift(position, key))
}

/// Encrypts a byte sequence symbol by symbol with the double twist. With
/// `chain` set, each input byte is first XORed with the previous ciphertext
/// byte (zero for the first), extending diffusion across byte boundaries;
/// without it every byte is independent, which is the default mode.
pub fn encrypt_symbols(message: &[u8], key: &KeyPair, chain: bool) -> Vec<u8> {
    let mut out = Vec::with_capacity(message.len());
    let mut prev = 0u8;
    for (p, &m) in message.iter().enumerate() {
        let x = if chain { m ^ prev } else { m };
        let c = twist_forward(twist_forward(x, p, &key.k1), p, &key.k2);
        out.push(c);
        prev = c;
    }
    out
}

/// Exact inverse of [`encrypt_symbols`] under the same key and mode.
pub fn decrypt_symbols(ciphertext: &[u8], key: &KeyPair, chain: bool) -> Vec<u8> {
    let mut out = Vec::with_capacity(ciphertext.len());
    let mut prev = 0u8;
    for (p, &c) in ciphertext.iter().enumerate() {
        let x = twist_inverse(twist_inverse(c, p, &key.k2), p, &key.k1);
        if chain {
            out.push(x ^ prev);
            prev = c;
        } else {
            out.push(x);
        }
    }
    out
}
