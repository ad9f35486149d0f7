use clap::ValueEnum;
use zigzag_core::exactmath::UniPoly;
use zigzag_core::permstats::entringer_row;
use zigzag_core::zigzag::{
    classical_eulerian, f_rational, gamma_from_z, u_bipoly_chain, z_polys, zr_poly, Cache, CacheError, OmegaTable,
};

use crate::output::{DocKind, OutputDoc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Z,
    Omega,
    Gamma,
    Zr,
    Entringer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    /// Z_n(t)
    Z,
    /// U_n(s,t) as numerator over a power of (1-s)
    U,
    /// F_m(y), indexed by m
    F,
    /// Classical Eulerian A_n(t)
    Eulerian,
    /// Z^r_n(t)
    Zr,
}

/// Where tables come from: the on-disk cache when one is configured.
pub struct Source<'a> {
    pub cache: Option<&'a Cache>,
}

impl Source<'_> {
    fn omega(&self, max_n: usize, max_m: usize) -> Result<OmegaTable, CacheError> {
        match self.cache {
            Some(c) => c.omega(max_n, max_m),
            None => Ok(zigzag_core::zigzag::omega_table(max_n, max_m)?),
        }
    }

    fn z_polys(&self, max_n: usize) -> Result<Vec<UniPoly>, CacheError> {
        match self.cache {
            Some(c) => c.z_polys(max_n),
            None => Ok(z_polys(max_n)?),
        }
    }
}

fn index_headers(corner: &str, range: impl Iterator<Item = usize>) -> Vec<String> {
    std::iter::once(corner.to_string()).chain(range.map(|k| k.to_string())).collect()
}

fn row(label: usize, cells: impl IntoIterator<Item = String>) -> Vec<String> {
    std::iter::once(label.to_string()).chain(cells).collect()
}

/// Coefficients of `t^1, t^2, ...` as strings.
fn above_constant(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().skip(1).map(ToString::to_string).collect()
}

pub fn table(
    kind: TableKind,
    max_n: usize,
    max_m: usize,
    r: Option<usize>,
    src: &Source,
) -> Result<OutputDoc, CacheError> {
    let base = |headers| OutputDoc::new(DocKind::Table, "table", headers).param("max-n", max_n);
    let doc = match kind {
        TableKind::Z => {
            let mut doc = base(index_headers("n\\k", 0..=max_n.max(2) - 2)).param("kind", "z");
            for (i, z) in src.z_polys(max_n)?.iter().enumerate() {
                doc.push(row(i + 1, above_constant(z)));
            }
            doc
        }
        TableKind::Omega => {
            let t = src.omega(max_n, max_m)?;
            let mut doc = base(index_headers("n\\m", 1..=max_m)).param("kind", "omega").param("max-m", max_m);
            for n in 0..=max_n {
                doc.push(row(n, t.row(n)[1..].iter().map(ToString::to_string)));
            }
            doc
        }
        TableKind::Gamma => {
            let mut doc = base(index_headers("n\\j", 0..=(max_n.max(2) - 2) / 2)).param("kind", "gamma");
            for (i, z) in src.z_polys(max_n)?.iter().enumerate() {
                let g = gamma_from_z(z, i + 1)?;
                doc.push(row(i + 1, g.gammas.iter().map(ToString::to_string)));
            }
            doc
        }
        TableKind::Zr => {
            let r = r.expect("checked by the caller");
            let mut doc =
                base(index_headers("n\\k", 0..=(max_n + 1).saturating_sub(r + 2))).param("kind", "zr").param("r", r);
            for n in 1..=max_n {
                doc.push(row(n, above_constant(&zr_poly(n, r))));
            }
            doc
        }
        TableKind::Entringer => {
            let mut doc = base(index_headers("n\\r", 1..=max_n.max(2) - 1)).param("kind", "entringer");
            for n in 2..=max_n {
                doc.push(row(n, entringer_row(n).iter().map(ToString::to_string)));
            }
            doc
        }
    };
    Ok(doc)
}

pub fn poly(
    kind: PolyKind,
    max_n: usize,
    max_m: usize,
    r: Option<usize>,
    src: &Source,
) -> Result<OutputDoc, CacheError> {
    let index = if kind == PolyKind::F { "m" } else { "n" };
    let mut doc = OutputDoc::new(DocKind::PolyList, "poly", vec![index.to_string(), "polynomial".to_string()]);
    match kind {
        PolyKind::Z => {
            for (i, z) in src.z_polys(max_n)?.iter().enumerate() {
                doc.push(row(i + 1, [z.to_string()]));
            }
        }
        PolyKind::U => {
            for u in u_bipoly_chain(max_n)?.iter() {
                doc.push(row(u.n, [u.display()]));
            }
        }
        PolyKind::F => {
            for m in 1..=max_m {
                doc.push(row(m, [f_rational(m)?.to_string()]));
            }
        }
        PolyKind::Eulerian => {
            for n in 1..=max_n {
                doc.push(row(n, [classical_eulerian(n).to_string()]));
            }
        }
        PolyKind::Zr => {
            let r = r.expect("checked by the caller");
            for n in 1..=max_n {
                doc.push(row(n, [zr_poly(n, r).to_string()]));
            }
            doc = doc.param("r", r);
        }
    }
    let kind_name = kind.to_possible_value().expect("no skipped variants").get_name().to_string();
    Ok(doc.param("kind", kind_name).param("max-n", max_n).param("max-m", max_m))
}
