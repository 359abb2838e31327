//! Static SVG renderings of a sweep: one small frame per iteration, laid out
//! in a grid, followed by a frame with the final answer.

use std::fmt::Write as _;

use tri_extremal::general_stable::VisitRecord;
use tri_extremal::three_stable::Enumeration;
use tri_extremal::{EnclosingTriangle, GTriangle, Point, Polygon, Scalar, Unit};

const FRAME: f64 = 220.0;
const PAD: f64 = 16.0;
const TITLE: f64 = 18.0;
const COLUMNS: usize = 5;
const LABEL_LIMIT: usize = 40;

/// Maps polygon coordinates into a frame, flipping y so it points up.
struct View {
    min: (f64, f64),
    scale: f64,
}

impl View {
    fn fit(points: &[(f64, f64)]) -> View {
        let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
        for &(x, y) in points {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(f64::MIN_POSITIVE);
        View { min: (lo.0, hi.1), scale: (FRAME - 2.0 * PAD) / span }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (PAD + (x - self.min.0) * self.scale, PAD + (self.min.1 - y) * self.scale)
    }
}

fn float<T: Scalar>(p: &Point<T>) -> (f64, f64) {
    (p.x.to_f64(), p.y.to_f64())
}

struct Canvas<'a, T> {
    poly: &'a Polygon<T>,
    view: View,
    out: String,
    frames: usize,
}

impl<'a, T: Scalar> Canvas<'a, T> {
    fn new(poly: &'a Polygon<T>, extra: &[(f64, f64)]) -> Self {
        let mut pts: Vec<_> = poly.vertices().iter().map(float).collect();
        pts.extend_from_slice(extra);
        Canvas { poly, view: View::fit(&pts), out: String::new(), frames: 0 }
    }

    fn xy(&self, p: (f64, f64)) -> (f64, f64) {
        self.view.map(p)
    }

    fn vertex(&self, i: usize) -> (f64, f64) {
        self.xy(float(self.poly.vertex(i)))
    }

    fn open_frame(&mut self, title: &str) {
        let (col, row) = (self.frames % COLUMNS, self.frames / COLUMNS);
        self.frames += 1;
        let (x, y) = (col as f64 * FRAME, row as f64 * (FRAME + TITLE));
        let _ = writeln!(self.out, r#"<g transform="translate({x:.1} {y:.1})">"#);
        let _ = writeln!(self.out, r##"<rect width="{FRAME}" height="{}" fill="white" stroke="#ddd"/>"##, FRAME + TITLE);
        let _ = writeln!(self.out, r#"<text x="6" y="{}" font-size="11">{title}</text>"#, FRAME + TITLE - 6.0);
        let pts: Vec<String> = (0..self.poly.len())
            .map(|i| {
                let (x, y) = self.vertex(i);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(self.out, r##"<polygon points="{}" fill="#f4f4f4" stroke="#888"/>"##, pts.join(" "));
        if self.poly.len() <= LABEL_LIMIT {
            for i in 0..self.poly.len() {
                let (x, y) = self.vertex(i);
                let label = self.poly.input_index(i);
                let _ = writeln!(self.out, r##"<text x="{:.1}" y="{:.1}" font-size="8" fill="#555">{label}</text>"##, x + 3.0, y - 3.0);
            }
        }
    }

    fn close_frame(&mut self) {
        self.out.push_str("</g>\n");
    }

    fn dot(&mut self, p: (f64, f64), color: &str) {
        let _ = writeln!(self.out, r#"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="{color}"/>"#, p.0, p.1);
    }

    fn segment(&mut self, a: (f64, f64), b: (f64, f64), color: &str, width: f64) {
        let _ = writeln!(
            self.out,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="{width}"/>"#,
            a.0, a.1, b.0, b.1
        );
    }

    fn triangle(&mut self, pts: [(f64, f64); 3], fill: &str) {
        let s: Vec<String> = pts.iter().map(|p| format!("{:.2},{:.2}", p.0, p.1)).collect();
        let _ = writeln!(
            self.out,
            r#"<polygon points="{}" fill="{fill}" fill-opacity="0.3" stroke="{fill}"/>"#,
            s.join(" ")
        );
    }

    fn unit(&mut self, u: Unit, color: &str) {
        match u {
            Unit::Vertex(i) => {
                let p = self.vertex(i);
                self.dot(p, color);
            }
            Unit::Edge(i) => {
                let (a, b) = (self.vertex(i), self.vertex(i + 1));
                self.segment(a, b, color, 4.0);
            }
        }
    }

    fn g_triangle(&mut self, t: &GTriangle, fill: &str) {
        let pts = t.points().map(|p| self.xy(float(p)));
        self.triangle(pts, fill);
    }

    fn finish(self) -> String {
        let rows = self.frames.div_ceil(COLUMNS).max(1);
        let (w, h) = (COLUMNS as f64 * FRAME, rows as f64 * (FRAME + TITLE));
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" font-family=\"sans-serif\">\n{}</svg>\n",
            self.out
        )
    }
}

/// One frame per record of each of the three sweeps: chord `BC` in blue,
/// farthest vertex `A` in red, triangles reported at that step in orange.
pub fn three_stable_frames<T: Scalar>(poly: &Polygon<T>, e: &Enumeration) -> String {
    let mut c = Canvas::new(poly, &[]);
    for (sweep, trace) in e.traces.iter().enumerate() {
        for (step, rec) in trace.records.iter().enumerate() {
            let title = format!(
                "sweep {sweep} step {step}: B={} C={} {:?}",
                poly.input_index(rec.b),
                poly.input_index(rec.c),
                rec.decision
            );
            c.open_frame(&title);
            for t in &rec.reported {
                let pts = t.indices().map(|i| c.vertex(i));
                c.triangle(pts, "#f08c00");
            }
            let (b, cc, a) = (c.vertex(rec.b), c.vertex(rec.c), c.vertex(rec.a));
            c.segment(b, cc, "#1c7ed6", 1.5);
            c.dot(b, "#1c7ed6");
            c.dot(cc, "#1c7ed6");
            c.dot(a, "#e03131");
            c.close_frame();
        }
    }
    c.open_frame(&format!("{} 3-stable triangles", e.triangles.len()));
    for t in &e.triangles {
        let pts = t.indices().map(|i| c.vertex(i));
        c.triangle(pts, "#f08c00");
    }
    c.close_frame();
    c.finish()
}

/// One frame per visited unit pair (first unit blue, second green, farthest
/// vertices red), then the triangles and, for enclosing runs, the minimum.
pub fn general_frames<'t, T: Scalar>(
    poly: &Polygon<T>,
    visits: &[VisitRecord],
    triangles: impl Iterator<Item = &'t GTriangle>,
    enclosing: Option<&EnclosingTriangle>,
) -> String {
    let extra: Vec<(f64, f64)> = enclosing.map_or(Vec::new(), |t| vec![float(&t.a), float(&t.b), float(&t.c)]);
    let mut c = Canvas::new(poly, &extra);
    let n = poly.len();
    for (step, v) in visits.iter().enumerate() {
        c.open_frame(&format!("rotation {} step {step}", v.rotation));
        c.unit(v.pair.first(), "#1c7ed6");
        c.unit(v.pair.second(), "#2f9e44");
        let span = (v.a_last + n - v.a_first) % n;
        for d in 0..=span {
            let p = c.vertex((v.a_first + d) % n);
            c.dot(p, "#e03131");
        }
        c.close_frame();
    }
    let triangles: Vec<&GTriangle> = triangles.collect();
    let title = match enclosing {
        Some(t) => format!("minimum enclosing area {}", t.area),
        None => format!("{} generally 3-stable triangles", triangles.len()),
    };
    c.open_frame(&title);
    if let Some(t) = enclosing {
        let pts = [&t.a, &t.b, &t.c].map(|p| c.xy(float(p)));
        c.triangle(pts, "#1c7ed6");
    }
    for t in triangles {
        c.g_triangle(t, "#f08c00");
    }
    c.close_frame();
    c.finish()
}
