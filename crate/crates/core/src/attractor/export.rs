use std::fmt::Write as _;
use std::io::Write;

use crate::error::{Error, Result};
use crate::polygon::Triangle;

use super::raster::{Bitmap, Viewport};

/// Binary PGM (`P5`, maxval 255).
pub fn export_pgm(bitmap: &Bitmap) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", bitmap.width(), bitmap.height()).into_bytes();
    out.extend_from_slice(bitmap.pixels());
    out
}

pub fn write_pgm<W: Write>(bitmap: &Bitmap, mut out: W) -> Result<()> {
    out.write_all(&export_pgm(bitmap))?;
    Ok(())
}

/// Reads a `P5` image with maxval 255. PGM carries no plane coordinates,
/// so the viewport is supplied by the caller.
pub fn parse_pgm(bytes: &[u8], viewport: Viewport) -> Result<Bitmap> {
    let mut fields = Vec::with_capacity(4);
    let mut pos = 0;
    while fields.len() < 4 {
        while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b'#') {
            if bytes[pos] == b'#' {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            } else {
                pos += 1;
            }
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(Error::Parse("truncated PGM header".into()));
        }
        fields.push(std::str::from_utf8(&bytes[start..pos]).map_err(|e| Error::Parse(e.to_string()))?);
    }
    // exactly one whitespace byte separates the header from the raster
    pos += 1;
    if fields[0] != "P5" {
        return Err(Error::Parse(format!("unsupported magic {:?}", fields[0])));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad PGM field {s:?}")));
    let (width, height, maxval) = (num(fields[1])?, num(fields[2])?, num(fields[3])?);
    if maxval != 255 {
        return Err(Error::Parse(format!("unsupported maxval {maxval}")));
    }
    let data = bytes.get(pos..).unwrap_or_default();
    Bitmap::from_pixels(width, height, viewport, data.to_vec())
}

/// Fill colours by class index; class 0 is the largest scale.
pub const PALETTE: [&str; 8] = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgShape {
    pub outline: Triangle,
    pub class: usize,
}

/// SVG 1.1 document with one `<polygon>` per shape. The y axis is flipped
/// so the plane appears with y pointing up.
pub fn export_svg(shapes: &[SvgShape]) -> String {
    let pts = shapes.iter().flat_map(|s| s.outline);
    let vp = Viewport::around(pts, 0.02).unwrap_or(Viewport { xmin: 0.0, ymin: 0.0, xmax: 1.0, ymax: 1.0 });
    let stroke = 1e-3 * vp.width().max(vp.height());
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        vp.xmin,
        -vp.ymax,
        vp.width(),
        vp.height()
    );
    for s in shapes {
        let points: Vec<String> = s.outline.iter().map(|p| format!("{},{}", p.x, 0.0 - p.y)).collect();
        let _ = writeln!(
            out,
            "<polygon class=\"c{}\" points=\"{}\" fill=\"{}\" stroke=\"black\" stroke-width=\"{}\"/>",
            s.class,
            points.join(" "),
            PALETTE[s.class % PALETTE.len()],
            stroke
        );
    }
    out.push_str("</svg>\n");
    out
}
