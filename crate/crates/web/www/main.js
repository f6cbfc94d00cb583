// Built by `wasm-pack build crates/web --target web --out-dir www/pkg`.
import init, { gaps, represent, tree } from "./pkg/frobkit_web.js";

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";

function pair() {
  return [Number($("a").value), Number($("b").value)];
}

function drawGaps(a, b) {
  const report = JSON.parse(gaps(a, b));
  const gapSet = new Set(report.gaps.map(Number));
  $("gap-summary").textContent =
    `${report.count} gaps, Frobenius number ${report.frobenius}`;
  const strip = $("strip");
  strip.replaceChildren();
  const upto = Math.min(a * b + Math.min(a, b), 600);
  for (let d = 0; d <= upto; d++) {
    const cell = document.createElement("span");
    cell.textContent = d;
    cell.className = gapSet.has(d) ? "gap" : "hit";
    if (d === Number(report.frobenius)) cell.classList.add("frob");
    cell.title = gapSet.has(d) ? `${d} is a gap` : `${d} is representable`;
    cell.onclick = () => { $("d").value = d; drawRepresent(a, b); };
    strip.appendChild(cell);
  }
}

function drawRepresent(a, b) {
  const d = Number($("d").value);
  const out = $("rep-out");
  try {
    const r = JSON.parse(represent(a, b, d));
    if (r.recursive.x === null) {
      out.textContent = `${d} cannot be written as ${a}x + ${b}y with x, y ≥ 0.`;
      return;
    }
    const all = r.all.expressions.map((e) => `(${e.x}, ${e.y})`).join(", ");
    out.innerHTML =
      `<code>${d} = ${a}·${r.recursive.x} + ${b}·${r.recursive.y}</code><br>` +
      `all ${r.all.count}: ${all}`;
  } catch (e) {
    out.innerHTML = `<span class="err">${e}</span>`;
  }
}

function drawTree(a, b) {
  const depth = Number($("depth").value);
  $("depth-val").textContent = depth;
  const host = $("tree-svg");
  host.replaceChildren();
  let t;
  try {
    t = JSON.parse(tree(a, b, depth));
  } catch (e) {
    host.innerHTML = `<p class="err">${e}</p>`;
    return;
  }
  const rowH = 36, colW = 70, pad = 50;
  const width = Math.max(...t.levels.map((l) => l.expressions.length)) * colW + 2 * pad;
  const height = t.levels.length * rowH + pad;
  const pos = new Map();
  t.levels.forEach((level, k) => {
    const n = level.expressions.length;
    level.expressions.forEach((e, i) => {
      const x = width / 2 + (i - (n - 1) / 2) * colW;
      pos.set(`${level.d}:${e.x}:${e.y}`, [x, pad / 2 + k * rowH]);
    });
  });
  const svg = document.createElementNS(SVG, "svg");
  svg.setAttribute("width", width);
  svg.setAttribute("height", height);
  for (const edge of t.edges) {
    const [x1, y1] = pos.get(`${edge.from.d}:${edge.from.x}:${edge.from.y}`);
    const [x2, y2] = pos.get(`${edge.to.d}:${edge.to.x}:${edge.to.y}`);
    const line = document.createElementNS(SVG, "line");
    Object.entries({ x1, y1, x2, y2 }).forEach(([k, v]) => line.setAttribute(k, v));
    line.setAttribute("stroke", edge.unit === "E1" ? "#3572b0" : "#e08a1e");
    line.setAttribute("stroke-width", 1.5);
    svg.appendChild(line);
  }
  t.levels.forEach((level) => {
    for (const e of level.expressions) {
      const [x, y] = pos.get(`${level.d}:${e.x}:${e.y}`);
      const label = document.createElementNS(SVG, "text");
      label.setAttribute("x", x);
      label.setAttribute("y", y + 4);
      label.setAttribute("text-anchor", "middle");
      label.setAttribute("font-size", 11);
      label.setAttribute("paint-order", "stroke");
      label.setAttribute("stroke", "#fafafa");
      label.setAttribute("stroke-width", 4);
      label.textContent = `${level.d}:(${e.x},${e.y})`;
      svg.appendChild(label);
    }
  });
  host.appendChild(svg);
}

function redraw() {
  const [a, b] = pair();
  try {
    gaps(a, b);
    $("pair-error").textContent = "";
  } catch (e) {
    $("pair-error").textContent = String(e);
    return;
  }
  drawGaps(a, b);
  drawRepresent(a, b);
  drawTree(a, b);
}

await init();
for (const id of ["a", "b"]) $(id).addEventListener("input", redraw);
$("d").addEventListener("input", () => drawRepresent(...pair()));
$("depth").addEventListener("input", () => drawTree(...pair()));
redraw();
