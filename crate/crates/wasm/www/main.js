import init, { Demo, bounds, decomposition } from "./pkg/icg_wasm.js";

const SVG = "http://www.w3.org/2000/svg";
const $ = (id) => document.getElementById(id);
const FOREST_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"];

let demo = null;
let overlay = null;
let positions = [];
let selected = null;

function paletteColor(c, k) {
  return `hsl(${Math.round((360 * (c - 1)) / Math.max(k, 1))}, 70%, 55%)`;
}

function layout(n, edges) {
  // A few hundred steps of spring embedding from a circle.
  const w = 560, r = 220;
  const p = Array.from({ length: n }, (_, i) => ({
    x: w / 2 + r * Math.cos((2 * Math.PI * i) / Math.max(n, 1)),
    y: w / 2 + r * Math.sin((2 * Math.PI * i) / Math.max(n, 1)),
  }));
  const ideal = Math.min(140, 420 / Math.sqrt(Math.max(n, 1)));
  for (let step = 0; step < 300; step++) {
    const f = p.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = p[i].x - p[j].x, dy = p[i].y - p[j].y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const push = (ideal * ideal) / d2;
        f[i].x += dx * push * 0.05; f[i].y += dy * push * 0.05;
        f[j].x -= dx * push * 0.05; f[j].y -= dy * push * 0.05;
      }
    }
    for (const e of edges) {
      const [u, v] = e.endpoints;
      const dx = p[v].x - p[u].x, dy = p[v].y - p[u].y;
      const d = Math.max(Math.hypot(dx, dy), 1);
      const pull = (d - ideal) / d * 0.1;
      f[u].x += dx * pull; f[u].y += dy * pull;
      f[v].x -= dx * pull; f[v].y -= dy * pull;
    }
    const cool = 1 - step / 300;
    for (let i = 0; i < n; i++) {
      p[i].x = Math.min(w - 30, Math.max(30, p[i].x + Math.max(-10, Math.min(10, f[i].x)) * cool));
      p[i].y = Math.min(w - 30, Math.max(30, p[i].y + Math.max(-10, Math.min(10, f[i].y)) * cool));
    }
  }
  return p;
}

function el(tag, attrs, parent) {
  const e = document.createElementNS(SVG, tag);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  if (parent) parent.appendChild(e);
  return e;
}

function render() {
  const board = $("board");
  board.replaceChildren();
  if (!demo) return;
  const view = JSON.parse(demo.view());
  const hints = JSON.parse(demo.hints());
  const showOverlay = $("overlay").checked;
  const defs = el("defs", {}, board);
  const marker = el("marker", { id: "arrow", viewBox: "0 0 10 10", refX: "9", refY: "5", markerWidth: "6", markerHeight: "6", orient: "auto" }, defs);
  el("path", { d: "M0,0 L10,5 L0,10 z", fill: "#555" }, marker);

  for (const e of view.edges) {
    const [t, h] = showOverlay ? e.orientation : e.endpoints;
    const a = positions[t], b = positions[h];
    const attrs = { x1: a.x, y1: a.y, x2: b.x, y2: b.y, stroke: showOverlay ? FOREST_COLORS[e.forest % FOREST_COLORS.length] : "#999", "stroke-width": 2 };
    if (showOverlay) attrs["marker-end"] = "url(#arrow)";
    el("line", attrs, board);
  }
  const roots = new Set(view.roots.map(([, v]) => v));
  positions.forEach((p, v) => {
    el("circle", { cx: p.x, cy: p.y, r: 11, fill: "#fff", stroke: showOverlay && roots.has(v) ? "#000" : "#666", "stroke-width": showOverlay && roots.has(v) ? 3 : 1.5 }, board);
    const label = el("text", { x: p.x, y: p.y + 4, "text-anchor": "middle", "font-size": 11 }, board);
    label.textContent = v;
  });
  for (const h of hints.incidences) {
    const e = view.edges[h.edge];
    const other = e.endpoints[0] === h.vertex ? e.endpoints[1] : e.endpoints[0];
    const a = positions[h.vertex], b = positions[other];
    const x = a.x + (b.x - a.x) * 0.25, y = a.y + (b.y - a.y) * 0.25;
    const fill = h.color ? paletteColor(h.color, hints.palette) : "#fff";
    const dot = el("circle", {
      cx: x, cy: y, r: 8, fill,
      stroke: h.active ? "#f0a000" : h.available.length === 0 && !h.color ? "#b00" : "#333",
      "stroke-width": h.active ? 3 : 1,
      "stroke-dasharray": h.kind === "down" ? "2,2" : "",
      class: "inc" + (selected === h.id ? " selected" : ""),
    }, board);
    const title = el("title", {}, dot);
    title.textContent = `(${h.vertex}, e${h.edge}) ${h.kind}, forest ${h.forest}` +
      (h.color ? `, color ${h.color}` : `, available: ${h.available.join(" ")}`) +
      (h.active ? ", active" : "") + `, climbed ${h.climbs}x`;
    if (h.color) {
      const t = el("text", { x, y: y + 3, "text-anchor": "middle", "font-size": 9, "pointer-events": "none" }, board);
      t.textContent = h.color;
    } else if (view.status === "ongoing") {
      dot.addEventListener("click", () => { selected = h.id; render(); });
    }
  }
  $("status").textContent = statusText(view);
  $("legend").textContent = showOverlay
    ? `${view.forests} forest(s); thick outline = root; arrows point away from roots; dashed disc = down incidence; orange ring = active.`
    : "";
  renderSelection(hints);
}

function statusText(view) {
  const base = `palette ${view.palette}, Δ = ${view.max_degree}, ${view.history.length} moves`;
  if (view.status === "alice_wins") return `Alice wins (${base})`;
  if (view.status === "bob_wins") return `Bob wins (${base})`;
  return `Your move (${base})`;
}

function renderSelection(hints) {
  const box = $("colors");
  box.replaceChildren();
  const h = hints.incidences.find((x) => x.id === selected && x.color === null);
  if (!h || hints.status !== "ongoing") {
    $("selection").textContent = "No incidence selected.";
    return;
  }
  $("selection").textContent = `Incidence (${h.vertex}, e${h.edge}), ${h.kind}:`;
  for (const c of h.available) {
    const b = document.createElement("button");
    b.textContent = c;
    b.style.background = paletteColor(c, hints.palette);
    b.addEventListener("click", () => play(h.vertex, h.edge, c));
    box.appendChild(b);
  }
}

function log(events) {
  const out = $("log");
  for (const e of events) {
    out.textContent += JSON.stringify(e) + "\n";
  }
  out.scrollTop = out.scrollHeight;
}

function play(vertex, edge, color) {
  $("error").textContent = "";
  try {
    const t = JSON.parse(demo.bob_move(vertex, edge, color));
    log(t.events);
  } catch (err) {
    $("error").textContent = String(err);
  }
  selected = null;
  render();
}

function newGame() {
  $("error").textContent = "";
  $("log").textContent = "";
  selected = null;
  const params = $("params").value.split(",").map((s) => s.trim()).filter((s) => s).map(Number);
  const palette = $("palette-rule").value === "fixed"
    ? { rule: "fixed", k: Number($("k").value) }
    : { rule: "theorem" };
  const spec = { family: $("family").value, params, seed: Number($("seed").value), palette, root: { policy: $("root").value } };
  try {
    demo = new Demo(JSON.stringify(spec));
  } catch (err) {
    demo = null;
    $("error").textContent = String(err);
    render();
    return;
  }
  const view = JSON.parse(demo.view());
  overlay = JSON.parse(decomposition(view.graph, $("root").value));
  positions = layout(overlay.vertices, overlay.edges);
  log(demo.transcript().trim().split("\n").map((l) => JSON.parse(l)));
  render();
}

function calculate() {
  const out = $("b-out");
  try {
    const b = JSON.parse(bounds(Number($("b-delta").value), Number($("b-a").value), Number($("b-k").value)));
    const rows = [
      ["theorem bound ⌊(3Δ−a)/2⌋ + 8a − 1", b.theorem],
      ["lower bound ⌈3Δ/2⌉", b.lower],
      ["trivial upper bound 3Δ − 1", b.trivial_upper],
    ];
    if (b.andres) {
      rows.push(["degenerate: 2Δ + 4k − 2", b.andres.general.value]);
      rows.push([`degenerate: 2Δ + 3k − 1${b.andres.large_degree.applicable ? "" : " (n/a)"}`, b.andres.large_degree.value]);
      rows.push([`degenerate: Δ + 8k − 2${b.andres.small_degree.applicable ? "" : " (n/a)"}`, b.andres.small_degree.value]);
      rows.push(["best degenerate bound", b.andres_best]);
    }
    const table = document.createElement("table");
    for (const [name, value] of rows) {
      const tr = table.insertRow();
      tr.insertCell().textContent = name;
      tr.insertCell().textContent = value;
    }
    out.className = "";
    out.replaceChildren(table);
  } catch (err) {
    out.textContent = String(err);
    out.className = "err";
  }
}

await init();
$("new-game").addEventListener("click", newGame);
$("overlay").addEventListener("change", render);
$("b-go").addEventListener("click", calculate);
newGame();
calculate();
