//! C ABI for the `sierpinski` crate.
//!
//! Objects are handed out as opaque pointers (`SierpIfs`, `SierpCover`,
//! `SierpTiling`) and must be released with the matching `*_free`. Every
//! fallible call returns a [`SierpStatus`]; on failure a description is
//! available from [`sierp_last_error_message`] on the same thread.
//!
//! The header `include/sierpinski.h` is regenerated by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sierpinski::attractor::{deterministic_cover, MapWeighting};
use sierpinski::ifs::IfsRecord;
use sierpinski::tiling::{make_tiling, ThetaStream};
use sierpinski::{
    build_ifs, chaos_game, dimension_of, moran_dimension, AffineMap2, ChaosOptions, Error, FamilyTag, Point2,
    SierpinskiIFS, TriangleCover, TriangleParams,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SierpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParams = 2,
    DegenerateTriangle = 3,
    FamilyDomainViolation = 4,
    SingularMap = 5,
    ConsistencyFailure = 6,
    InvalidRatio = 7,
    BracketFailure = 8,
    NoConvergence = 9,
    DomainEdge = 10,
    DepthCap = 11,
    EmptySet = 12,
    BadViewport = 13,
    WordLengthMismatch = 14,
    InvalidWord = 15,
    Unsupported = 16,
    Parse = 17,
    Io = 18,
    BufferTooSmall = 19,
    OutOfRange = 20,
    Panic = 99,
}

impl From<&Error> for SierpStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidParams { .. } => SierpStatus::InvalidParams,
            Error::DegenerateTriangle { .. } => SierpStatus::DegenerateTriangle,
            Error::FamilyDomainViolation { .. } => SierpStatus::FamilyDomainViolation,
            Error::SingularMap { .. } => SierpStatus::SingularMap,
            Error::ConsistencyFailure { .. } => SierpStatus::ConsistencyFailure,
            Error::InvalidRatio { .. } => SierpStatus::InvalidRatio,
            Error::BracketFailure { .. } => SierpStatus::BracketFailure,
            Error::NoConvergence { .. } => SierpStatus::NoConvergence,
            Error::DomainEdge { .. } => SierpStatus::DomainEdge,
            Error::DepthCap { .. } => SierpStatus::DepthCap,
            Error::EmptySet => SierpStatus::EmptySet,
            Error::BadViewport(_) => SierpStatus::BadViewport,
            Error::WordLengthMismatch { .. } => SierpStatus::WordLengthMismatch,
            Error::InvalidWord(_) => SierpStatus::InvalidWord,
            Error::Unsupported(_) => SierpStatus::Unsupported,
            Error::Parse(_) => SierpStatus::Parse,
            Error::Io(_) => SierpStatus::Io,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SierpFamily {
    Nnn = 0,
    Fnn = 1,
    Ffn = 2,
    Fff = 3,
}

impl From<SierpFamily> for FamilyTag {
    fn from(f: SierpFamily) -> Self {
        match f {
            SierpFamily::Nnn => FamilyTag::Nnn,
            SierpFamily::Fnn => FamilyTag::Fnn,
            SierpFamily::Ffn => FamilyTag::Ffn,
            SierpFamily::Fff => FamilyTag::Fff,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SierpPoint {
    pub x: f64,
    pub y: f64,
}

impl From<Point2> for SierpPoint {
    fn from(p: Point2) -> Self {
        Self { x: p.x, y: p.y }
    }
}

/// `x' = m11·x + m12·y + tx`, `y' = m21·x + m22·y + ty`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SierpAffine {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
    pub tx: f64,
    pub ty: f64,
}

impl From<AffineMap2> for SierpAffine {
    fn from(m: AffineMap2) -> Self {
        Self { m11: m.m11, m12: m.m12, m21: m.m21, m22: m.m22, tx: m.tx, ty: m.ty }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SierpTile {
    pub transform: SierpAffine,
    pub scale: f64,
    pub outline: [SierpPoint; 3],
}

pub struct SierpIfs(SierpinskiIFS);

pub struct SierpCover(TriangleCover);

pub struct SierpTiling(sierpinski::Tiling);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: SierpStatus, msg: impl Into<String>) -> SierpStatus {
    set_last_error(msg.into());
    status
}

fn guard(f: impl FnOnce() -> Result<(), SierpStatus>) -> SierpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SierpStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(SierpStatus::Panic, "internal panic"),
    }
}

fn lib_err(e: Error) -> SierpStatus {
    let status = SierpStatus::from(&e);
    fail(status, e.to_string())
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, SierpStatus> {
    p.as_ref().ok_or_else(|| fail(SierpStatus::NullPointer, "null pointer argument"))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, SierpStatus> {
    p.as_mut().ok_or_else(|| fail(SierpStatus::NullPointer, "null output pointer"))
}

unsafe fn c_str<'a>(p: *const c_char) -> Result<&'a str, SierpStatus> {
    if p.is_null() {
        return Err(fail(SierpStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(SierpStatus::Parse, "string is not valid UTF-8"))
}

/// Message for the most recent failure on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sierp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `out_ifs` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn sierp_ifs_new(family: SierpFamily, a: f64, b: f64, out_ifs: *mut *mut SierpIfs) -> SierpStatus {
    guard(|| {
        let slot = out(out_ifs)?;
        *slot = ptr::null_mut();
        let ifs = TriangleParams::new(a, b).and_then(|p| build_ifs(family.into(), p)).map_err(lib_err)?;
        *slot = Box::into_raw(Box::new(SierpIfs(ifs)));
        Ok(())
    })
}

/// # Safety
/// `ifs` must come from `sierp_ifs_new` or `sierp_ifs_from_text`, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn sierp_ifs_free(ifs: *mut SierpIfs) {
    if !ifs.is_null() {
        drop(Box::from_raw(ifs));
    }
}

/// Writes `(α, β, γ)` to `out_ratios[0..3]`.
///
/// # Safety
/// `out_ratios` must point to three writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sierp_ifs_ratios(ifs: *const SierpIfs, out_ratios: *mut f64) -> SierpStatus {
    guard(|| {
        let ifs = deref(ifs)?;
        if out_ratios.is_null() {
            return Err(fail(SierpStatus::NullPointer, "null output pointer"));
        }
        ptr::copy_nonoverlapping(ifs.0.ratios().as_ptr(), out_ratios, 3);
        Ok(())
    })
}

/// Map `index` (0 = f_A, 1 = f_B, 2 = f_C).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sierp_ifs_map(ifs: *const SierpIfs, index: usize, out_map: *mut SierpAffine) -> SierpStatus {
    guard(|| {
        let ifs = deref(ifs)?;
        let map = ifs.0.maps().get(index).ok_or_else(|| fail(SierpStatus::OutOfRange, format!("map index {index}")))?;
        *out(out_map)? = (*map).into();
        Ok(())
    })
}

/// Vertices `A, B, C`.
///
/// # Safety
/// `out_points` must point to three writable `SierpPoint`s.
#[no_mangle]
pub unsafe extern "C" fn sierp_ifs_vertices(ifs: *const SierpIfs, out_points: *mut SierpPoint) -> SierpStatus {
    guard(|| {
        let ifs = deref(ifs)?;
        write_points(&ifs.0.vertices(), out_points)
    })
}

/// Touching points `M` (on AC), `N` (on AB) and `O` (on BC).
///
/// # Safety
/// `out_points` must point to three writable `SierpPoint`s.
#[no_mangle]
pub unsafe extern "C" fn sierp_ifs_overlap_points(ifs: *const SierpIfs, out_points: *mut SierpPoint) -> SierpStatus {
    guard(|| {
        let ifs = deref(ifs)?;
        let pts = ifs.0.overlap_points().map_err(lib_err)?;
        write_points(&pts, out_points)
    })
}

unsafe fn write_points(pts: &[Point2], dst: *mut SierpPoint) -> Result<(), SierpStatus> {
    if dst.is_null() {
        return Err(fail(SierpStatus::NullPointer, "null output pointer"));
    }
    for (i, p) in pts.iter().enumerate() {
        dst.add(i).write((*p).into());
    }
    Ok(())
}

/// Runs the full construction invariant check.
///
/// # Safety
/// `ifs` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sierp_ifs_check(ifs: *const SierpIfs) -> SierpStatus {
    guard(|| deref(ifs)?.0.check_invariants().map_err(lib_err))
}

/// Text serialization; release the string with `sierp_string_free`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sierp_ifs_to_text(ifs: *const SierpIfs, out_text: *mut *mut c_char) -> SierpStatus {
    guard(|| {
        let ifs = deref(ifs)?;
        let slot = out(out_text)?;
        *slot = CString::new(ifs.0.to_text()).map_err(|e| fail(SierpStatus::Io, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// Parses text from `sierp_ifs_to_text` and rebuilds the system, failing
/// with `CONSISTENCY_FAILURE` if stored maps disagree with a fresh build.
///
/// # Safety
/// `text` must be NUL-terminated; `out_ifs` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sierp_ifs_from_text(text: *const c_char, out_ifs: *mut *mut SierpIfs) -> SierpStatus {
    guard(|| {
        let slot = out(out_ifs)?;
        *slot = ptr::null_mut();
        let ifs = IfsRecord::parse(c_str(text)?)
            .and_then(|r| r.rebuild(sierpinski::tolerances::TRANSFORM))
            .map_err(lib_err)?;
        *slot = Box::into_raw(Box::new(SierpIfs(ifs)));
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn sierp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Solves `Σ ratios[i]^d = 1`.
///
/// # Safety
/// `ratios` must point to `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn sierp_moran_dimension(ratios: *const f64, len: usize, tol: f64, out_d: *mut f64) -> SierpStatus {
    guard(|| {
        if ratios.is_null() {
            return Err(fail(SierpStatus::NullPointer, "null ratios"));
        }
        let r = std::slice::from_raw_parts(ratios, len);
        *out(out_d)? = moran_dimension(r, tol).map_err(lib_err)?;
        Ok(())
    })
}

/// Dimension of `family` at `(a, b)`; `out_residual` may be NULL.
///
/// # Safety
/// `out_d` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sierp_dimension_of(
    family: SierpFamily,
    a: f64,
    b: f64,
    tol: f64,
    out_d: *mut f64,
    out_residual: *mut f64,
) -> SierpStatus {
    guard(|| {
        let d = out(out_d)?;
        let s = TriangleParams::new(a, b).and_then(|p| dimension_of(family.into(), p, tol)).map_err(lib_err)?;
        *d = s.d;
        if let Some(r) = out_residual.as_mut() {
            *r = s.residual;
        }
        Ok(())
    })
}

/// Writes `n` chaos-game points into `out_points`, which must hold at
/// least `capacity` points.
///
/// # Safety
/// `out_points` must point to `capacity` writable `SierpPoint`s.
#[no_mangle]
pub unsafe extern "C" fn sierp_chaos_game(
    ifs: *const SierpIfs,
    n: usize,
    seed: u64,
    burn_in: usize,
    uniform: bool,
    out_points: *mut SierpPoint,
    capacity: usize,
) -> SierpStatus {
    guard(|| {
        let ifs = deref(ifs)?;
        if capacity < n {
            return Err(fail(SierpStatus::BufferTooSmall, format!("need {n} points, buffer holds {capacity}")));
        }
        let weighting = if uniform { MapWeighting::Uniform } else { MapWeighting::Area };
        let cloud = chaos_game(&ifs.0, &ChaosOptions { n, seed, burn_in, weighting });
        write_points(&cloud.points, out_points)
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sierp_cover_new(ifs: *const SierpIfs, depth: usize, out_cover: *mut *mut SierpCover) -> SierpStatus {
    guard(|| {
        let ifs = deref(ifs)?;
        let slot = out(out_cover)?;
        *slot = ptr::null_mut();
        let cover = deterministic_cover(&ifs.0, depth).map_err(lib_err)?;
        *slot = Box::into_raw(Box::new(SierpCover(cover)));
        Ok(())
    })
}

/// Number of triangles, or 0 for NULL.
///
/// # Safety
/// `cover` must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sierp_cover_len(cover: *const SierpCover) -> usize {
    cover.as_ref().map_or(0, |c| c.0.len())
}

/// # Safety
/// `out_points` must point to three writable `SierpPoint`s.
#[no_mangle]
pub unsafe extern "C" fn sierp_cover_triangle(cover: *const SierpCover, index: usize, out_points: *mut SierpPoint) -> SierpStatus {
    guard(|| {
        let cover = deref(cover)?;
        let t = cover.0.triangles().get(index).ok_or_else(|| fail(SierpStatus::OutOfRange, format!("triangle {index}")))?;
        write_points(t, out_points)
    })
}

/// # Safety
/// `cover` must come from `sierp_cover_new`, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn sierp_cover_free(cover: *mut SierpCover) {
    if !cover.is_null() {
        drop(Box::from_raw(cover));
    }
}

/// Builds `T_{θ,k}`; `theta` uses the `3(12)` notation.
///
/// # Safety
/// `theta` must be NUL-terminated; other pointers valid.
#[no_mangle]
pub unsafe extern "C" fn sierp_tiling_new(
    ifs: *const SierpIfs,
    theta: *const c_char,
    k: usize,
    out_tiling: *mut *mut SierpTiling,
) -> SierpStatus {
    guard(|| {
        let ifs = deref(ifs)?;
        let slot = out(out_tiling)?;
        *slot = ptr::null_mut();
        let theta: ThetaStream = c_str(theta)?.parse().map_err(lib_err)?;
        let tiling = make_tiling(&ifs.0, &theta, k).map_err(lib_err)?;
        *slot = Box::into_raw(Box::new(SierpTiling(tiling)));
        Ok(())
    })
}

/// # Safety
/// `tiling` must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sierp_tiling_len(tiling: *const SierpTiling) -> usize {
    tiling.as_ref().map_or(0, |t| t.0.len())
}

/// Tile `index` in lexicographic word order.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sierp_tiling_tile(tiling: *const SierpTiling, index: usize, out_tile: *mut SierpTile) -> SierpStatus {
    guard(|| {
        let tiling = deref(tiling)?;
        let t = tiling.0.tiles.get(index).ok_or_else(|| fail(SierpStatus::OutOfRange, format!("tile {index}")))?;
        *out(out_tile)? = SierpTile {
            transform: t.transform.into(),
            scale: t.scale,
            outline: t.outline.map(SierpPoint::from),
        };
        Ok(())
    })
}

/// Tiling as an SVG document; release with `sierp_string_free`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sierp_tiling_svg(tiling: *const SierpTiling, out_text: *mut *mut c_char) -> SierpStatus {
    guard(|| {
        let tiling = deref(tiling)?;
        let slot = out(out_text)?;
        *slot = CString::new(tiling.0.to_svg()).map_err(|e| fail(SierpStatus::Io, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `tiling` must come from `sierp_tiling_new`, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn sierp_tiling_free(tiling: *mut SierpTiling) {
    if !tiling.is_null() {
        drop(Box::from_raw(tiling));
    }
}
