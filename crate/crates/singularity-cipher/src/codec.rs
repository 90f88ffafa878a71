//! Framed bit streams: a 32-bit big-endian length header counting payload
//! bytes, followed by each byte's bits most significant first. The header
//! lets the glyph grid be truncated unambiguously when the last row is
//! partial; the channel is lossless text, so there is no checksum.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("payload of {0} bytes does not fit a 32-bit length header")]
    Oversize(usize),
    #[error("bit stream of {0} bits is too short for a header")]
    MalformedHeader(usize),
    #[error("bit count {actual} does not match the header-declared {expected}")]
    LengthMismatch { expected: u64, actual: u64 },
}

pub const HEADER_BITS: usize = 32;

/// A framed bit sequence: 32 header bits plus 8 bits per payload byte.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitStream {
    bits: Vec<bool>,
}

impl BitStream {
    /// Wraps raw bits without validation; [`from_bitstream`] and
    /// [`BitStream::validate_framing`] check the framing invariant.
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Payload byte count declared by the header, if one is present.
    pub fn declared_len(&self) -> Option<u32> {
        if self.bits.len() < HEADER_BITS {
            return None;
        }
        Some(
            self.bits[..HEADER_BITS]
                .iter()
                .fold(0u32, |acc, &bit| (acc << 1) | u32::from(bit)),
        )
    }

    /// Checks the invariant `bit count = 32 + 8 × declared length`.
    pub fn validate_framing(&self) -> Result<(), CodecError> {
        let declared = self
            .declared_len()
            .ok_or(CodecError::MalformedHeader(self.bits.len()))?;
        let expected = HEADER_BITS as u64 + 8 * u64::from(declared);
        if self.bits.len() as u64 != expected {
            return Err(CodecError::LengthMismatch {
                expected,
                actual: self.bits.len() as u64,
            });
        }
        Ok(())
    }
}

/// Frames `data` as a header plus MSB-first payload bits.
pub fn to_bitstream(data: &[u8]) -> Result<BitStream, CodecError> {
    let len = u32::try_from(data.len()).map_err(|_| CodecError::Oversize(data.len()))?;
    let mut bits = Vec::with_capacity(HEADER_BITS + 8 * data.len());
    for i in (0..32).rev() {
        bits.push((len >> i) & 1 == 1);
    }
    for &byte in data {
        for i in (0..8).rev() {
            bits.push((byte >> i) & 1 == 1);
        }
    }
    Ok(BitStream::from_bits(bits))
}

/// Recovers the payload bytes; exact inverse of [`to_bitstream`].
pub fn from_bitstream(bs: &BitStream) -> Result<Vec<u8>, CodecError> {
    bs.validate_framing()?;
    Ok(bs.bits()[HEADER_BITS..]
        .chunks(8)
        .map(|chunk| chunk.iter().fold(0u8, |acc, &bit| (acc << 1) | u8::from(bit)))
        .collect())
}
