//! Per-symbol twist cipher with visual-paradox steganographic output.
//!
//! The pipeline runs in four stages. A passphrase deterministically yields
//! two twist keys; every plaintext byte is scrambled by the pair of
//! position-dependent twist permutations ([`topology`]); the ciphertext is
//! framed as a bit stream behind a 32-bit length header ([`codec`]); and
//! each bit is drawn as a geometric glyph (a genuinely filled right
//! triangle for 0, a missing-square arrangement for 1) into a
//! deterministic SVG grid ([`paradox`]). Decoding reverses every stage:
//! polygon areas classify the glyphs, the framing recovers the ciphertext,
//! and the inverse twists restore the plaintext.
//!
//! The [`analysis`] module measures (rather than assumes) the statistical
//! behaviour of the construction: avalanche effect, ciphertext byte
//! uniformity and the nominal key-space size.
//!
//! This is an experimental construction. It carries no authentication and
//! the key derivation is reproducibility-oriented, not hardened; do not
//! use it to protect real secrets.

pub mod analysis;
pub mod cli;
pub mod codec;
pub mod paradox;
pub mod topology;

pub use codec::{from_bitstream, to_bitstream, BitStream};
pub use paradox::{assemble_image, decode_bits, parse_svg, render_svg, CipherImage};
pub use topology::{decrypt_symbols, encrypt_symbols, KeyPair};
