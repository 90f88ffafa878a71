//! Helpers shared by the integration suites.
#![allow(dead_code)]

use singularity_cipher::topology::SplitMix64;

pub fn random_bytes(rng: &mut SplitMix64, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.next_u64() as u8).collect()
}

/// Rewrites a rendered document with every coordinate multiplied by
/// `factor`: the root width/height and all polygon points. The
/// `data-columns` and `data-cell` attributes are metadata, not
/// coordinates, and stay untouched.
pub fn scale_svg(doc: &str, factor: f64) -> String {
    let mut out = String::with_capacity(doc.len() + 64);
    let mut parts = doc.split('"');
    let mut prefix = parts.next().unwrap();
    out.push_str(prefix);
    while let Some(value) = parts.next() {
        out.push('"');
        if prefix.ends_with("width=") || prefix.ends_with("height=") {
            out.push_str(&fmt_scaled(value.parse::<f64>().unwrap() * factor));
        } else if prefix.ends_with("points=") {
            let pairs: Vec<String> = value
                .split_ascii_whitespace()
                .map(|pair| {
                    let (x, y) = pair.split_once(',').unwrap();
                    format!(
                        "{},{}",
                        fmt_scaled(x.parse::<f64>().unwrap() * factor),
                        fmt_scaled(y.parse::<f64>().unwrap() * factor)
                    )
                })
                .collect();
            out.push_str(&pairs.join(" "));
        } else {
            out.push_str(value);
        }
        out.push('"');
        prefix = parts.next().unwrap_or("");
        out.push_str(prefix);
    }
    out
}

fn fmt_scaled(value: f64) -> String {
    let mut s = format!("{value:.3}");
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    s
}
