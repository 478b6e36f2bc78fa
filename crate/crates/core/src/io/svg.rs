//! Deterministic SVG rendering of domains, sites, and burn regions.
//!
//! Everything is emitted in a fixed order with fixed-precision pixel
//! coordinates, so identical scenes produce byte-identical documents.

use crate::geodesic::{build_index, PolygonalDomain, SampledDomain};
use crate::geom::{bisector_chord, delaunay, Point};

const CANVAS: f64 = 720.0;
const PALETTE: [&str; 8] = [
    "#d4443e", "#2b7bba", "#3a9e4e", "#b06fc9", "#e08b33", "#2aa198", "#aa5439", "#6273d8",
];

/// What to draw. `domain` is required; everything else is optional layers.
#[derive(Debug, Clone, Copy)]
pub struct SvgScene<'a> {
    pub domain: &'a PolygonalDomain,
    /// Site vertex indices, ascending.
    pub sites: &'a [usize],
    /// Sample spacing for per-site shaded burn regions; `None` disables.
    pub shade_resolution: Option<f64>,
    /// Dash the bisector chords between neighboring sites (convex only).
    pub chords: bool,
    /// Label the listed vertices 1..n in this order.
    pub ordering: Option<&'a [usize]>,
}

impl<'a> SvgScene<'a> {
    pub fn new(domain: &'a PolygonalDomain) -> Self {
        SvgScene {
            domain,
            sites: &[],
            shade_resolution: None,
            chords: false,
            ordering: None,
        }
    }
}

/// World-to-pixel frame: uniform scale, y flipped so north is up.
struct Frame {
    lo: Point,
    hi: Point,
    margin: f64,
    scale: f64,
}

impl Frame {
    fn new(domain: &PolygonalDomain) -> Frame {
        let (lo, hi) = domain.bbox();
        let span = (hi.x - lo.x).max(hi.y - lo.y);
        let margin = 0.08 * span;
        Frame {
            lo,
            hi,
            margin,
            scale: CANVAS / (span + 2.0 * 0.08 * span),
        }
    }

    fn width(&self) -> f64 {
        (self.hi.x - self.lo.x + 2.0 * self.margin) * self.scale
    }

    fn height(&self) -> f64 {
        (self.hi.y - self.lo.y + 2.0 * self.margin) * self.scale
    }

    fn x(&self, p: Point) -> f64 {
        (p.x - self.lo.x + self.margin) * self.scale
    }

    fn y(&self, p: Point) -> f64 {
        (self.hi.y - p.y + self.margin) * self.scale
    }
}

fn ring_path(d: &mut String, f: &Frame, pts: &[Point]) {
    for (i, &p) in pts.iter().enumerate() {
        d.push_str(if i == 0 { "M " } else { "L " });
        d.push_str(&format!("{:.3} {:.3} ", f.x(p), f.y(p)));
    }
    d.push('Z');
}

fn site_color(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

/// Render the scene to a standalone SVG document.
pub fn render_svg(scene: &SvgScene) -> String {
    let domain = scene.domain;
    let f = Frame::new(domain);
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" \
         viewBox=\"0 0 {w:.3} {h:.3}\">\n",
        w = f.width(),
        h = f.height()
    ));
    s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");

    // Domain: one even-odd path, outer ring then each hole ring.
    let mut d = String::new();
    ring_path(&mut d, &f, domain.outer().vertices());
    for h in domain.holes() {
        d.push(' ');
        ring_path(&mut d, &f, h.vertices());
    }
    s.push_str(&format!(
        "<path d=\"{d}\" fill=\"#ececec\" stroke=\"#1a1a1a\" stroke-width=\"1.5\" \
         fill-rule=\"evenodd\"/>\n"
    ));

    if let Some(resolution) = scene.shade_resolution {
        if !scene.sites.is_empty() {
            shade_regions(&mut s, &f, domain, scene.sites, resolution);
        }
    }

    if scene.chords && scene.sites.len() >= 2 && domain.is_convex() {
        draw_chords(&mut s, &f, domain, scene.sites);
    }

    for (i, &v) in scene.sites.iter().enumerate() {
        let p = domain.vertex(v);
        let (x, y) = (f.x(p), f.y(p));
        let color = site_color(i);
        s.push_str(&format!(
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"5\" fill=\"{color}\" \
             stroke=\"#1a1a1a\" stroke-width=\"1\"/>\n"
        ));
        s.push_str(&format!(
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"9\" fill=\"none\" \
             stroke=\"{color}\" stroke-width=\"1.5\"/>\n"
        ));
    }

    if let Some(ordering) = scene.ordering {
        for (rank, &v) in ordering.iter().enumerate() {
            let p = domain.vertex(v);
            s.push_str(&format!(
                "<text x=\"{:.3}\" y=\"{:.3}\" font-family=\"monospace\" font-size=\"16\" \
                 fill=\"#1a1a1a\">{}</text>\n",
                f.x(p) + 8.0,
                f.y(p) - 8.0,
                rank + 1
            ));
        }
    }

    s.push_str("</svg>\n");
    s
}

/// One `<g>` of sample cells per site, colored by nearest site. Ties go to
/// the earliest site in the list.
fn shade_regions(
    s: &mut String,
    f: &Frame,
    domain: &PolygonalDomain,
    sites: &[usize],
    resolution: f64,
) {
    let index = build_index(domain);
    let sd = SampledDomain::build(&index, resolution);
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); sites.len()];
    for i in 0..sd.samples().len() {
        let mut best = f64::INFINITY;
        let mut arg = 0;
        for (si, &site) in sites.iter().enumerate() {
            let d = sd.sample_to_nearest_site_single(i, site);
            if d < best {
                best = d;
                arg = si;
            }
        }
        groups[arg].push(i);
    }
    let side = resolution * f.scale * 0.9;
    for (si, group) in groups.iter().enumerate() {
        if group.is_empty() {
            continue;
        }
        s.push_str(&format!(
            "<g class=\"region\" fill=\"{}\" fill-opacity=\"0.35\">\n",
            site_color(si)
        ));
        for &i in group {
            let p = sd.samples()[i];
            s.push_str(&format!(
                "<rect x=\"{:.3}\" y=\"{:.3}\" width=\"{side:.3}\" height=\"{side:.3}\"/>\n",
                f.x(p) - side / 2.0,
                f.y(p) - side / 2.0
            ));
        }
        s.push_str("</g>\n");
    }
}

/// Dashed bisector chords between neighboring sites: the triangulation
/// edges of the site points, or just the one pair. Degenerate chords are
/// skipped.
fn draw_chords(s: &mut String, f: &Frame, domain: &PolygonalDomain, sites: &[usize]) {
    let pairs: Vec<(usize, usize)> = if sites.len() == 2 {
        vec![(sites[0], sites[1])]
    } else {
        let pts: Vec<Point> = sites.iter().map(|&v| domain.vertex(v)).collect();
        match delaunay(&pts) {
            Ok(tri) => tri
                .edges()
                .into_iter()
                .map(|(a, b)| (sites[a], sites[b]))
                .collect(),
            // Collinear sites: chain them in index order.
            Err(_) => sites.windows(2).map(|w| (w[0], w[1])).collect(),
        }
    };
    for (u, v) in pairs {
        if let Ok((p, q)) = bisector_chord(u, v, domain.outer()) {
            s.push_str(&format!(
                "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" \
                 stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n",
                f.x(p),
                f.y(p),
                f.x(q),
                f.y(q)
            ));
        }
    }
}
