//! Visual paradox encoding. Each framed bit becomes one grid cell: bit 0
//! is a genuinely filled 13×5 right triangle, bit 1 is a stylized
//! missing-square arrangement: five disjoint pieces that appear to fill
//! the same triangle but cover half a unit less. The grid serializes to a
//! small deterministic SVG subset and decodes back through polygon areas
//! alone, so decoding survives any uniform rescaling of the document.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::codec::{BitStream, CodecError};
use thiserror::Error;

/// Cell lattice pitch in glyph units.
pub const CELL_WIDTH: f64 = 15.0;
pub const CELL_HEIGHT: f64 = 7.0;
/// Glyph origin offset inside its cell.
pub const GLYPH_OFFSET: f64 = 1.0;
/// Area of the filled footprint triangle (13 × 5 / 2).
pub const FOOTPRINT_AREA: f64 = 32.5;

/// A cell decodes to bit 0 strictly above this filled ratio, bit 1 at or
/// below it. The nominal ratios are 1.0 and 32/32.5 ≈ 0.9846.
const BIT_ZERO_MIN_RATIO: f64 = 0.99;
/// Ratios outside this band mean the cell is not a recognizable glyph.
const DECODABLE_BAND: RangeInclusive<f64> = 0.95..=1.01;

#[derive(Debug, Error, PartialEq)]
pub enum ParadoxError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    DegeneratePolygon(usize),
    #[error("polygon vertices must wind counterclockwise")]
    NotCounterclockwise,
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("polygon centered at ({x}, {y}) lies outside the cell grid")]
    OrphanPolygon { x: f64, y: f64 },
    #[error("document contains no polygons")]
    EmptyImage,
    #[error("cell {index} has filled ratio {ratio} outside the decodable band")]
    AmbiguousCell { index: usize, ratio: f64 },
    #[error("decoded bits violate framing: {0}")]
    FramingError(#[from] CodecError),
}

fn malformed(msg: impl Into<String>) -> ParadoxError {
    ParadoxError::MalformedDocument(msg.into())
}

/// A simple counterclockwise polygon in glyph units.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<(f64, f64)>,
}

impl Polygon {
    /// Validates the vertex count and the winding (positive shoelace sum).
    pub fn new(vertices: Vec<(f64, f64)>) -> Result<Self, ParadoxError> {
        if vertices.len() < 3 {
            return Err(ParadoxError::DegeneratePolygon(vertices.len()));
        }
        if shoelace_sum(&vertices) <= 0.0 {
            return Err(ParadoxError::NotCounterclockwise);
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[(f64, f64)] {
        &self.vertices
    }

    /// Shoelace area: ½|Σ (xᵢ·yᵢ₊₁ − xᵢ₊₁·yᵢ)|.
    pub fn area(&self) -> f64 {
        shoelace_sum(&self.vertices).abs() / 2.0
    }

    /// Axis-aligned bounds as (min_x, min_y, max_x, max_y).
    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        let mut bounds = (
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        );
        for &(x, y) in &self.vertices {
            bounds.0 = bounds.0.min(x);
            bounds.1 = bounds.1.min(y);
            bounds.2 = bounds.2.max(x);
            bounds.3 = bounds.3.max(y);
        }
        bounds
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        for (x, y) in &mut self.vertices {
            *x += dx;
            *y += dy;
        }
    }
}

fn shoelace_sum(vertices: &[(f64, f64)]) -> f64 {
    let mut sum = 0.0;
    for (i, &(x0, y0)) in vertices.iter().enumerate() {
        let (x1, y1) = vertices[(i + 1) % vertices.len()];
        sum += x0 * y1 - x1 * y0;
    }
    sum
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlyphKind {
    Zero,
    One,
}

/// One cell's shape set in its local frame.
#[derive(Debug, Clone, PartialEq)]
pub struct Glyph {
    pub kind: GlyphKind,
    pub polygons: Vec<Polygon>,
}

impl Glyph {
    /// Bit 0: one genuinely filled right triangle, area 32.5.
    pub fn zero() -> Glyph {
        Glyph {
            kind: GlyphKind::Zero,
            polygons: vec![fixed_polygon(&[(0, 0), (13, 0), (13, 5)])],
        }
    }

    /// Bit 1: the five pieces of the missing-square arrangement, total
    /// area 32. The unit hole at (10,1)–(11,2) is offset by the half-unit
    /// bulge of the two triangles over the footprint hypotenuse, leaving a
    /// net deficit of 0.5 against the filled glyph.
    pub fn one() -> Glyph {
        Glyph {
            kind: GlyphKind::One,
            polygons: vec![
                fixed_polygon(&[(0, 0), (5, 0), (5, 2)]),
                fixed_polygon(&[(5, 2), (13, 2), (13, 5)]),
                fixed_polygon(&[(5, 0), (13, 0), (13, 1), (5, 1)]),
                fixed_polygon(&[(5, 1), (10, 1), (10, 2), (5, 2)]),
                fixed_polygon(&[(11, 1), (13, 1), (13, 2), (11, 2)]),
            ],
        }
    }

    pub fn for_bit(bit: bool) -> Glyph {
        if bit {
            Glyph::one()
        } else {
            Glyph::zero()
        }
    }

    /// Total polygon area.
    pub fn area(&self) -> f64 {
        self.polygons.iter().map(Polygon::area).sum()
    }
}

fn fixed_polygon(points: &[(i32, i32)]) -> Polygon {
    Polygon::new(
        points
            .iter()
            .map(|&(x, y)| (f64::from(x), f64::from(y)))
            .collect(),
    )
    .expect("fixed glyph geometry is valid")
}

/// The glyph grid: row-major cells, `columns` per row, the last row
/// possibly partial. Cell count always equals the encoded bit count.
#[derive(Debug, Clone, PartialEq)]
pub struct CipherImage {
    pub columns: usize,
    pub cells: Vec<Glyph>,
}

impl CipherImage {
    pub fn rows(&self) -> usize {
        self.cells.len().div_ceil(self.columns)
    }
}

/// Lays one glyph per bit onto the grid, row-major.
pub fn assemble_image(bs: &BitStream, columns: usize) -> CipherImage {
    assert!(columns >= 1, "columns must be at least 1");
    CipherImage {
        columns,
        cells: bs.bits().iter().map(|&bit| Glyph::for_bit(bit)).collect(),
    }
}

/// Serializes the grid as a minimal SVG document: the root carries the
/// computed width/height plus `data-columns` and `data-cell` so a parser
/// can recover the lattice, and the body is one `polygon` element per
/// glyph polygon, cell by cell in row-major order. Byte-stable: the same
/// image always renders to the same text.
pub fn render_svg(img: &CipherImage) -> String {
    let width = img.columns as f64 * CELL_WIDTH;
    let height = img.rows() as f64 * CELL_HEIGHT;
    let mut out = String::with_capacity(128 + img.cells.len() * 160);
    out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"");
    push_number(&mut out, width);
    out.push_str("\" height=\"");
    push_number(&mut out, height);
    let _ = writeln!(out, "\" data-columns=\"{}\" data-cell=\"15x7\">", img.columns);
    for (i, glyph) in img.cells.iter().enumerate() {
        let origin_x = (i % img.columns) as f64 * CELL_WIDTH + GLYPH_OFFSET;
        let origin_y = (i / img.columns) as f64 * CELL_HEIGHT + GLYPH_OFFSET;
        for polygon in &glyph.polygons {
            out.push_str("<polygon points=\"");
            for (j, &(x, y)) in polygon.vertices().iter().enumerate() {
                if j > 0 {
                    out.push(' ');
                }
                push_number(&mut out, x + origin_x);
                out.push(',');
                push_number(&mut out, y + origin_y);
            }
            out.push_str("\"/>\n");
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Writes a nonnegative number with up to three decimals, trailing zeros
/// trimmed.
fn push_number(out: &mut String, value: f64) {
    debug_assert!(value >= 0.0 && value.is_finite());
    let milli = (value * 1000.0).round() as u64;
    let _ = write!(out, "{}", milli / 1000);
    let frac = milli % 1000;
    if frac != 0 {
        out.push('.');
        if frac.is_multiple_of(100) {
            let _ = write!(out, "{}", frac / 100);
        } else if frac.is_multiple_of(10) {
            let _ = write!(out, "{:02}", frac / 10);
        } else {
            let _ = write!(out, "{frac:03}");
        }
    }
}

/// Filled-area ratio of a cell: total polygon area over the area of the
/// footprint right triangle spanned by the cell's bounding box. Both
/// glyph kinds span the same 13×5 box, so the ratio is scale-invariant:
/// exactly 1 for the filled triangle, 32/32.5 for the paradox pieces.
pub fn filled_ratio(polygons: &[Polygon]) -> f64 {
    if polygons.is_empty() {
        return 0.0;
    }
    let mut min_x = f64::INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for polygon in polygons {
        let (x0, y0, x1, y1) = polygon.bounding_box();
        min_x = min_x.min(x0);
        min_y = min_y.min(y0);
        max_x = max_x.max(x1);
        max_y = max_y.max(y1);
    }
    let footprint = (max_x - min_x) * (max_y - min_y) / 2.0;
    let total: f64 = polygons.iter().map(Polygon::area).sum();
    total / footprint
}

/// Extracts one bit per cell from the filled-area ratio and validates the
/// framing of the result.
pub fn decode_bits(img: &CipherImage) -> Result<BitStream, ParadoxError> {
    let mut bits = Vec::with_capacity(img.cells.len());
    for (index, glyph) in img.cells.iter().enumerate() {
        let ratio = filled_ratio(&glyph.polygons);
        if !DECODABLE_BAND.contains(&ratio) {
            return Err(ParadoxError::AmbiguousCell { index, ratio });
        }
        bits.push(ratio <= BIT_ZERO_MIN_RATIO);
    }
    let bs = BitStream::from_bits(bits);
    bs.validate_framing()?;
    Ok(bs)
}

/// Reads a rendered document back into a glyph grid. Accepts any uniform
/// positive rescaling of the original coordinates: the lattice pitch is
/// inferred from the root's declared width, `data-columns` and
/// `data-cell`, and each polygon is assigned to the cell containing its
/// bounding-box center. Unknown attributes are ignored, unknown elements
/// rejected.
pub fn parse_svg(doc: &str) -> Result<CipherImage, ParadoxError> {
    let mut scanner = Scanner::new(doc);
    scanner.skip_ws();
    let root = scanner.element_open()?;
    if root.name != "svg" {
        return Err(malformed(format!("unknown element '{}'", root.name)));
    }

    let mut polygons = Vec::new();
    if !root.self_closing {
        loop {
            scanner.skip_ws();
            if scanner.starts_with("</") {
                scanner.element_close("svg")?;
                break;
            }
            let element = scanner.element_open()?;
            if element.name != "polygon" {
                return Err(malformed(format!("unknown element '{}'", element.name)));
            }
            if !element.self_closing {
                scanner.element_close("polygon")?;
            }
            let points = element
                .attr("points")
                .ok_or_else(|| malformed("polygon without a points attribute"))?;
            polygons.push(parse_points(points)?);
        }
    }
    scanner.skip_ws();
    if !scanner.at_end() {
        return Err(malformed("content after the closing tag"));
    }
    if polygons.is_empty() {
        return Err(ParadoxError::EmptyImage);
    }

    let width = parse_number(
        root.attr("width")
            .ok_or_else(|| malformed("missing width attribute"))?,
    )?;
    let height = parse_number(
        root.attr("height")
            .ok_or_else(|| malformed("missing height attribute"))?,
    )?;
    let columns = parse_columns(
        root.attr("data-columns")
            .ok_or_else(|| malformed("missing data-columns attribute"))?,
    )?;
    let (cell_w, cell_h) = parse_cell(
        root.attr("data-cell")
            .ok_or_else(|| malformed("missing data-cell attribute"))?,
    )?;

    let pitch_x = width / columns as f64;
    let scale = pitch_x / cell_w;
    if !scale.is_finite() || scale <= 0.0 {
        return Err(malformed("degenerate cell lattice"));
    }
    let pitch_y = cell_h * scale;
    let rows = (height / pitch_y).round();
    if !rows.is_finite() || rows < 1.0 {
        return Err(malformed("degenerate grid height"));
    }
    let rows = rows as usize;

    let mut cells: Vec<Vec<Polygon>> = Vec::new();
    for mut polygon in polygons {
        let (x0, y0, x1, y1) = polygon.bounding_box();
        let center = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
        let col = (center.0 / pitch_x).floor();
        let row = (center.1 / pitch_y).floor();
        if col < 0.0 || row < 0.0 || col >= columns as f64 || row >= rows as f64 {
            return Err(ParadoxError::OrphanPolygon {
                x: center.0,
                y: center.1,
            });
        }
        let (col, row) = (col as usize, row as usize);
        let index = row * columns + col;
        if index >= cells.len() {
            cells.resize(index + 1, Vec::new());
        }
        let origin_x = col as f64 * pitch_x + GLYPH_OFFSET * scale;
        let origin_y = row as f64 * pitch_y + GLYPH_OFFSET * scale;
        polygon.translate(-origin_x, -origin_y);
        cells[index].push(polygon);
    }

    for (index, cell) in cells.iter().enumerate() {
        if cell.is_empty() {
            return Err(malformed(format!("cell {index} holds no polygons")));
        }
    }

    let cells = cells
        .into_iter()
        .map(|polygons| {
            let kind = if filled_ratio(&polygons) > BIT_ZERO_MIN_RATIO {
                GlyphKind::Zero
            } else {
                GlyphKind::One
            };
            Glyph { kind, polygons }
        })
        .collect();
    Ok(CipherImage { columns, cells })
}

fn parse_points(points: &str) -> Result<Polygon, ParadoxError> {
    let mut vertices = Vec::new();
    for pair in points.split_ascii_whitespace() {
        let (x, y) = pair
            .split_once(',')
            .ok_or_else(|| malformed(format!("bad point '{pair}'")))?;
        vertices.push((parse_number(x)?, parse_number(y)?));
    }
    Polygon::new(vertices).map_err(|e| malformed(format!("bad polygon: {e}")))
}

/// Decimal number with an optional fraction of at most three digits.
fn parse_number(text: &str) -> Result<f64, ParadoxError> {
    let bad = || malformed(format!("bad number '{text}'"));
    let bytes = text.as_bytes();
    let mut pos = 0;
    let negative = bytes.first() == Some(&b'-');
    if negative {
        pos = 1;
    }
    let int_start = pos;
    let mut int_part = 0u64;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        int_part = int_part * 10 + u64::from(bytes[pos] - b'0');
        pos += 1;
    }
    if pos == int_start || pos - int_start > 12 {
        return Err(bad());
    }
    let mut value = int_part as f64;
    if pos < bytes.len() && bytes[pos] == b'.' {
        pos += 1;
        let frac_start = pos;
        let mut frac = 0u32;
        let mut denom = 1u32;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            frac = frac * 10 + u32::from(bytes[pos] - b'0');
            denom *= 10;
            pos += 1;
        }
        if !(1..=3).contains(&(pos - frac_start)) {
            return Err(bad());
        }
        value += f64::from(frac) / f64::from(denom);
    }
    if pos != bytes.len() {
        return Err(bad());
    }
    Ok(if negative { -value } else { value })
}

fn parse_columns(text: &str) -> Result<usize, ParadoxError> {
    let columns: usize = text
        .parse()
        .map_err(|_| malformed(format!("bad data-columns '{text}'")))?;
    if columns == 0 {
        return Err(malformed("data-columns must be at least 1"));
    }
    Ok(columns)
}

fn parse_cell(text: &str) -> Result<(f64, f64), ParadoxError> {
    let (w, h) = text
        .split_once('x')
        .ok_or_else(|| malformed(format!("bad data-cell '{text}'")))?;
    let (w, h) = (parse_number(w)?, parse_number(h)?);
    if w <= 0.0 || h <= 0.0 {
        return Err(malformed("data-cell dimensions must be positive"));
    }
    Ok((w, h))
}

struct RawElement<'a> {
    name: &'a str,
    attrs: Vec<(&'a str, &'a str)>,
    self_closing: bool,
}

impl<'a> RawElement<'a> {
    fn attr(&self, name: &str) -> Option<&'a str> {
        self.attrs
            .iter()
            .find(|(key, _)| *key == name)
            .map(|&(_, value)| value)
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(doc: &'a str) -> Self {
        Self {
            bytes: doc.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn starts_with(&self, prefix: &str) -> bool {
        self.bytes[self.pos..].starts_with(prefix.as_bytes())
    }

    fn eat(&mut self, expected: u8) -> Result<(), ParadoxError> {
        match self.peek() {
            Some(b) if b == expected => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(malformed(format!(
                "expected '{}' at byte {}",
                expected as char, self.pos
            ))),
        }
    }

    fn name(&mut self) -> Result<&'a str, ParadoxError> {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_alphanumeric() || b == b'-' || b == b'_' || b == b':')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(malformed(format!("expected a name at byte {start}")));
        }
        // names and quoted values are delimited by ASCII, so the slice
        // stays on UTF-8 boundaries
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii-delimited slice"))
    }

    fn element_open(&mut self) -> Result<RawElement<'a>, ParadoxError> {
        self.eat(b'<')?;
        let name = self.name()?;
        let mut attrs = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'>') => {
                    self.pos += 1;
                    return Ok(RawElement {
                        name,
                        attrs,
                        self_closing: false,
                    });
                }
                Some(b'/') => {
                    self.pos += 1;
                    self.eat(b'>')?;
                    return Ok(RawElement {
                        name,
                        attrs,
                        self_closing: true,
                    });
                }
                Some(_) => {
                    let key = self.name()?;
                    self.skip_ws();
                    self.eat(b'=')?;
                    self.skip_ws();
                    self.eat(b'"')?;
                    let start = self.pos;
                    match self.bytes[start..].iter().position(|&b| b == b'"') {
                        Some(len) => self.pos += len,
                        None => self.pos = self.bytes.len(),
                    }
                    let value = std::str::from_utf8(&self.bytes[start..self.pos])
                        .expect("ascii-delimited slice");
                    self.eat(b'"')?;
                    attrs.push((key, value));
                }
                None => return Err(malformed("unterminated element")),
            }
        }
    }

    fn element_close(&mut self, expected: &str) -> Result<(), ParadoxError> {
        self.eat(b'<')?;
        self.eat(b'/')?;
        let name = self.name()?;
        if name != expected {
            return Err(malformed(format!("mismatched closing tag '{name}'")));
        }
        self.skip_ws();
        self.eat(b'>')
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::to_bitstream;

    fn polygon(points: &[(f64, f64)]) -> Polygon {
        Polygon::new(points.to_vec()).unwrap()
    }

    #[test]
    fn shoelace_areas() {
        assert_eq!(
            polygon(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).area(),
            1.0
        );
        assert_eq!(polygon(&[(0.0, 0.0), (13.0, 0.0), (13.0, 5.0)]).area(), 32.5);
        assert_eq!(
            polygon(&[(5.0, 0.0), (13.0, 0.0), (13.0, 1.0), (5.0, 1.0)]).area(),
            8.0
        );
    }

    #[test]
    fn degenerate_polygons_are_rejected() {
        assert_eq!(
            Polygon::new(vec![(0.0, 0.0), (1.0, 1.0)]),
            Err(ParadoxError::DegeneratePolygon(2))
        );
        assert_eq!(
            Polygon::new(vec![(0.0, 0.0), (1.0, 1.0), (2.0, 2.0)]),
            Err(ParadoxError::NotCounterclockwise)
        );
        assert_eq!(
            Polygon::new(vec![(0.0, 1.0), (1.0, 1.0), (1.0, 0.0)]),
            Err(ParadoxError::NotCounterclockwise)
        );
    }

    #[test]
    fn glyph_zero_shape() {
        let glyph = Glyph::zero();
        assert_eq!(glyph.polygons.len(), 1);
        assert_eq!(glyph.area(), 32.5);
        assert!(shoelace_sum(glyph.polygons[0].vertices()) > 0.0);
    }

    #[test]
    fn glyph_one_shape() {
        let glyph = Glyph::one();
        assert_eq!(glyph.polygons.len(), 5);
        let areas: Vec<f64> = glyph.polygons.iter().map(Polygon::area).collect();
        assert_eq!(areas, vec![5.0, 12.0, 8.0, 5.0, 2.0]);
        assert_eq!(glyph.area(), 32.0);
        assert_eq!(Glyph::zero().area() - glyph.area(), 0.5);
    }

    #[test]
    fn assemble_grid_shapes() {
        let bs = to_bitstream(&[0xAA]).unwrap(); // 40 bits
        let img = assemble_image(&bs, 8);
        assert_eq!(img.cells.len(), 40);
        assert_eq!(img.rows(), 5);

        let bs33 = BitStream::from_bits(vec![false; 33]);
        let img33 = assemble_image(&bs33, 8);
        assert_eq!(img33.rows(), 5);
    }

    #[test]
    fn empty_payload_assembles_all_zero_glyphs() {
        let bs = to_bitstream(&[]).unwrap();
        let img = assemble_image(&bs, 16);
        assert_eq!(img.cells.len(), 32);
        assert!(img.cells.iter().all(|c| c.kind == GlyphKind::Zero));
    }

    #[test]
    fn render_single_zero_glyph_golden() {
        let img = CipherImage {
            columns: 1,
            cells: vec![Glyph::zero()],
        };
        assert_eq!(
            render_svg(&img),
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"15\" height=\"7\" \
             data-columns=\"1\" data-cell=\"15x7\">\n\
             <polygon points=\"1,1 14,1 14,6\"/>\n\
             </svg>\n"
        );
    }

    #[test]
    fn render_counts_polygon_elements() {
        let one = CipherImage {
            columns: 1,
            cells: vec![Glyph::one()],
        };
        assert_eq!(render_svg(&one).matches("<polygon").count(), 5);
        let zero = CipherImage {
            columns: 1,
            cells: vec![Glyph::zero()],
        };
        assert_eq!(render_svg(&zero).matches("<polygon").count(), 1);
    }

    #[test]
    fn render_is_deterministic() {
        let bs = to_bitstream(b"determinism").unwrap();
        let a = render_svg(&assemble_image(&bs, 16));
        let b = render_svg(&assemble_image(&bs, 16));
        assert_eq!(a, b);
    }

    #[test]
    fn number_formatting_trims_trailing_zeros() {
        let mut s = String::new();
        for (value, expected) in [
            (13.0, "13"),
            (0.5, "0.5"),
            (2.25, "2.25"),
            (1.875, "1.875"),
            (150.0, "150"),
        ] {
            s.clear();
            push_number(&mut s, value);
            assert_eq!(s, expected);
        }
    }

    #[test]
    fn parse_round_trips_the_image_exactly() {
        let bs = to_bitstream(&[0x41, 0xFF, 0x00]).unwrap();
        let img = assemble_image(&bs, 7);
        let parsed = parse_svg(&render_svg(&img)).unwrap();
        assert_eq!(parsed, img);
    }

    #[test]
    fn parse_accepts_whitespace_and_unknown_attributes() {
        let doc = "  <svg  xmlns=\"x\" width=\"15\" height=\"7\" data-columns=\"1\" \
                   data-cell=\"15x7\" extra=\"ignored\" >\n\n\
                   <polygon stroke=\"none\" points=\"1,1 14,1 14,6\"></polygon>\n  </svg>  ";
        let img = parse_svg(doc).unwrap();
        assert_eq!(img.cells.len(), 1);
        assert_eq!(img.cells[0].kind, GlyphKind::Zero);
    }

    #[test]
    fn parse_rejects_unknown_elements() {
        let doc = "<svg width=\"15\" height=\"7\" data-columns=\"1\" data-cell=\"15x7\">\
                   <rect x=\"0\"/></svg>";
        assert!(matches!(
            parse_svg(doc),
            Err(ParadoxError::MalformedDocument(_))
        ));
    }

    #[test]
    fn parse_empty_svg_is_an_empty_image() {
        assert_eq!(parse_svg("<svg></svg>"), Err(ParadoxError::EmptyImage));
        assert_eq!(parse_svg("<svg/>"), Err(ParadoxError::EmptyImage));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            parse_svg("not a document"),
            Err(ParadoxError::MalformedDocument(_))
        ));
        assert!(matches!(
            parse_svg("<svg width=\"15\""),
            Err(ParadoxError::MalformedDocument(_))
        ));
        // coordinate with a four-digit fraction
        let doc = "<svg width=\"15\" height=\"7\" data-columns=\"1\" data-cell=\"15x7\">\
                   <polygon points=\"1.0001,1 14,1 14,6\"/></svg>";
        assert!(matches!(
            parse_svg(doc),
            Err(ParadoxError::MalformedDocument(_))
        ));
    }

    #[test]
    fn parse_flags_polygons_outside_the_grid() {
        let doc = "<svg width=\"15\" height=\"7\" data-columns=\"1\" data-cell=\"15x7\">\
                   <polygon points=\"1,1 14,1 14,6\"/>\
                   <polygon points=\"31,1 44,1 44,6\"/></svg>";
        assert!(matches!(
            parse_svg(doc),
            Err(ParadoxError::OrphanPolygon { .. })
        ));
    }

    #[test]
    fn parse_flags_holes_in_the_grid() {
        // cells 0 and 2 are present, cell 1 is empty
        let doc = "<svg width=\"45\" height=\"7\" data-columns=\"3\" data-cell=\"15x7\">\
                   <polygon points=\"1,1 14,1 14,6\"/>\
                   <polygon points=\"31,1 44,1 44,6\"/></svg>";
        assert!(matches!(
            parse_svg(doc),
            Err(ParadoxError::MalformedDocument(_))
        ));
    }

    #[test]
    fn decode_recovers_bytes() {
        let bs = to_bitstream(&[0x41]).unwrap();
        let img = assemble_image(&bs, 8);
        let decoded = decode_bits(&img).unwrap();
        assert_eq!(crate::codec::from_bitstream(&decoded).unwrap(), vec![0x41]);
    }

    #[test]
    fn glyph_one_ratio_matches_the_area_deficit() {
        let ratio = filled_ratio(&Glyph::one().polygons);
        assert!((ratio - 32.0 / 32.5).abs() < 1e-9);
        assert_eq!(filled_ratio(&Glyph::zero().polygons), 1.0);
    }

    #[test]
    fn decode_flags_ambiguous_cells() {
        // drop one piece of the arrangement: 30/32.5 falls below the band
        let mut glyph = Glyph::one();
        glyph.polygons.pop();
        let img = CipherImage {
            columns: 1,
            cells: vec![glyph],
        };
        assert!(matches!(
            decode_bits(&img),
            Err(ParadoxError::AmbiguousCell { index: 0, .. })
        ));
    }

    #[test]
    fn decode_enforces_framing() {
        let img = CipherImage {
            columns: 1,
            cells: vec![Glyph::zero()],
        };
        assert!(matches!(
            decode_bits(&img),
            Err(ParadoxError::FramingError(_))
        ));
    }
}
