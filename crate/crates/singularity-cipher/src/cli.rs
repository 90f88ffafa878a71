//! Command wiring for the `singcipher` binary: file encryption and
//! decryption through the full pipeline, plus the measurement harness.
//! Every run is a pure function of the flags (no wall clock, no OS
//! randomness), so identical invocations produce identical outputs.

use std::fs;
use std::path::PathBuf;

use crate::topology::KeyPair;
use crate::{analysis, codec, paradox, topology};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_EMPTY_PASSPHRASE: i32 = 3;
pub const EXIT_BAD_IMAGE: i32 = 4;

/// Passphrase used by `analyze` when none is supplied.
pub const DEFAULT_ANALYZE_PASSPHRASE: &str = "singularity";

/// Resolved command-line configuration, shared by all subcommands.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub passphrase: Option<String>,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub columns: usize,
    pub chain: bool,
    pub trials: u64,
    pub seed: u64,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            passphrase: None,
            input: None,
            output: None,
            columns: 16,
            chain: false,
            trials: 10_000,
            seed: 0,
        }
    }
}

fn derive_pair(passphrase: Option<&str>) -> Result<KeyPair, i32> {
    KeyPair::from_passphrase(passphrase.unwrap_or("").as_bytes()).map_err(|e| {
        eprintln!("error: {e} (pass --key or set SINGCIPHER_KEY)");
        EXIT_EMPTY_PASSPHRASE
    })
}

/// Reads the input file, encrypts it, and writes the glyph-grid image.
pub fn run_encrypt(cfg: &CliConfig) -> i32 {
    let (input, output) = match (&cfg.input, &cfg.output) {
        (Some(input), Some(output)) => (input, output),
        _ => {
            eprintln!("error: encrypt requires --in and --out");
            return EXIT_USAGE;
        }
    };
    let key = match derive_pair(cfg.passphrase.as_deref()) {
        Ok(key) => key,
        Err(code) => return code,
    };
    let plaintext = match fs::read(input) {
        Ok(data) => data,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", input.display());
            return EXIT_IO;
        }
    };
    let ciphertext = topology::encrypt_symbols(&plaintext, &key, cfg.chain);
    let bits = match codec::to_bitstream(&ciphertext) {
        Ok(bits) => bits,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_IO;
        }
    };
    let image = paradox::assemble_image(&bits, cfg.columns);
    if let Err(e) = fs::write(output, paradox::render_svg(&image)) {
        eprintln!("error: cannot write {}: {e}", output.display());
        return EXIT_IO;
    }
    EXIT_OK
}

/// Parses the image, decodes the bits, and writes the recovered plaintext.
/// There is no authentication: a wrong passphrase decodes cleanly to the
/// wrong bytes.
pub fn run_decrypt(cfg: &CliConfig) -> i32 {
    let (input, output) = match (&cfg.input, &cfg.output) {
        (Some(input), Some(output)) => (input, output),
        _ => {
            eprintln!("error: decrypt requires --in and --out");
            return EXIT_USAGE;
        }
    };
    let key = match derive_pair(cfg.passphrase.as_deref()) {
        Ok(key) => key,
        Err(code) => return code,
    };
    let document = match fs::read_to_string(input) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", input.display());
            return EXIT_IO;
        }
    };
    let ciphertext = match decode_document(&document) {
        Ok(bytes) => bytes,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_BAD_IMAGE;
        }
    };
    let plaintext = topology::decrypt_symbols(&ciphertext, &key, cfg.chain);
    if let Err(e) = fs::write(output, plaintext) {
        eprintln!("error: cannot write {}: {e}", output.display());
        return EXIT_IO;
    }
    EXIT_OK
}

fn decode_document(document: &str) -> Result<Vec<u8>, paradox::ParadoxError> {
    let image = paradox::parse_svg(document)?;
    let bits = paradox::decode_bits(&image)?;
    Ok(codec::from_bitstream(&bits)?)
}

/// Measures the avalanche effect, the byte uniformity of the ciphertext of
/// 65,536 constant bytes, and the nominal key space, then prints the
/// report block on standard output.
pub fn run_analyze(cfg: &CliConfig) -> i32 {
    if cfg.trials == 0 {
        eprintln!("error: --trials must be at least 1");
        return EXIT_USAGE;
    }
    let passphrase = match cfg.passphrase.as_deref() {
        Some(p) if !p.is_empty() => p,
        _ => DEFAULT_ANALYZE_PASSPHRASE,
    };
    let key = KeyPair::from_passphrase(passphrase.as_bytes()).expect("passphrase is non-empty");

    let avalanche = analysis::avalanche_ratio(&key, cfg.chain, cfg.trials, cfg.seed);
    let constant = vec![0x41u8; 65536];
    let ciphertext = topology::encrypt_symbols(&constant, &key, cfg.chain);
    let chi_square =
        analysis::chi_square_uniformity(&ciphertext).expect("sample exceeds the minimum");
    let report = analysis::AnalysisReport {
        avalanche,
        chi_square,
        keyspace_bits: analysis::keyspace_bits(256),
    };
    print!("{}", report.to_text());
    EXIT_OK
}
