import init, {
  metrics_for, census_feasible, estimate, census, coupon_curve,
} from "./pkg/cubediam_wasm.js";

const $ = (id) => document.getElementById(id);
const status = (text) => { $("status").textContent = text; };

const state = { report: null, predicted: [], actual: null };

function fillMetrics() {
  const n = Number($("size").value);
  const metrics = JSON.parse(metrics_for(n));
  const select = $("metric");
  const previous = select.value;
  select.innerHTML = "";
  for (const m of metrics) {
    const option = document.createElement("option");
    option.value = option.textContent = m;
    select.appendChild(option);
  }
  if (metrics.includes(previous)) select.value = previous;
  $("censusBtn").disabled = !census_feasible(n, select.value);
}

function fmt(x, digits = 4) {
  if (x === 0) return "0";
  if (x >= 1e6 || x < 1e-3) return x.toExponential(2);
  return x.toFixed(digits);
}

function runEstimate() {
  const n = Number($("size").value);
  const metric = $("metric").value;
  try {
    const payload = JSON.parse(estimate(n, metric, $("rmode").value));
    state.report = payload.report;
    state.predicted = payload.predicted_new;
    state.actual = null;
    render();
    status("");
  } catch (e) {
    status(`error: ${e}`);
  }
}

function runCensus() {
  const n = Number($("size").value);
  const metric = $("metric").value;
  status(`counting every configuration of the ${n}x${n}x${n} ${metric} graph — a few seconds…`);
  $("censusBtn").disabled = true;
  // let the status paint before the heavy call
  setTimeout(() => {
    try {
      const report = JSON.parse(census(n, metric));
      state.actual = report.levels.map((l) => l.new_states);
      const total = report.total.toLocaleString("en-US");
      status(`exact census: ${total} configurations, diameter ${report.diameter}`);
      render();
    } catch (e) {
      status(`error: ${e}`);
    } finally {
      $("censusBtn").disabled = !census_feasible(n, $("metric").value);
    }
  }, 30);
}

function render() {
  const r = state.report;
  if (!r) return;
  const d = r.predicted_diameter;
  $("summary").innerHTML =
    `<b>${r.label}</b>: N = ${r.n_configs.toExponential(3)}, r = ${fmt(r.branching, 4)}, ` +
    `E[T<sub>N</sub>]/N = ${r.threshold_over_n.toFixed(3)} &rarr; ` +
    `<b>predicted diameter ${d}</b> (closed form ${r.closed_form.toFixed(1)}); ` +
    r.outlook.map((o) =>
      `Pr(done by ${o.t}) = ${fmt(o.completion_probability, 3)}`).join(", ");

  const body = $("rows").tBodies[0];
  body.innerHTML = "";
  for (const row of r.rows) {
    const tr = document.createElement("tr");
    const cells = [row.t, fmt(row.s_over_n), fmt(row.c_over_n), fmt(row.t_over_n),
      row.seed ?? ""];
    for (const c of cells) {
      const td = document.createElement("td");
      td.textContent = c;
      tr.appendChild(td);
    }
    if (row.t === d) tr.style.fontWeight = "600";
    body.appendChild(tr);
  }

  drawSeries($("chart"), state.predicted, state.actual, d);
}

// log-scale step chart of the two per-step series
function drawSeries(canvas, predicted, actual, diameter) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const pad = { l: 64, r: 12, t: 12, b: 30 };

  // series tails decay far below one state per step; clip the scale there
  const values = predicted.concat(actual ?? []).filter((v) => v >= 0.01);
  if (!values.length) return;
  const ymax = Math.log10(Math.max(...values)) + 0.3;
  const ymin = Math.min(0, Math.log10(Math.min(...values)));
  const xmax = Math.max(predicted.length, actual ? actual.length : 0) - 1;

  const x = (t) => pad.l + (w - pad.l - pad.r) * t / xmax;
  const y = (v) => pad.t + (h - pad.t - pad.b) * (1 - (Math.log10(v) - ymin) / (ymax - ymin));

  ctx.strokeStyle = "#8886";
  ctx.fillStyle = "#888";
  ctx.font = "11px system-ui";
  ctx.textAlign = "right";
  for (let e = Math.ceil(ymin); e <= ymax; e += Math.max(1, Math.round((ymax - ymin) / 8))) {
    const yy = y(10 ** e);
    ctx.beginPath(); ctx.moveTo(pad.l, yy); ctx.lineTo(w - pad.r, yy); ctx.stroke();
    ctx.fillText(`1e${e}`, pad.l - 6, yy + 4);
  }
  ctx.textAlign = "center";
  const step = Math.max(1, Math.ceil(xmax / 20));
  for (let t = 0; t <= xmax; t += step) {
    ctx.fillText(t, x(t), h - pad.b + 16);
  }

  // marker at the predicted diameter
  ctx.strokeStyle = "#88888888";
  ctx.setLineDash([4, 4]);
  ctx.beginPath(); ctx.moveTo(x(diameter), pad.t); ctx.lineTo(x(diameter), h - pad.b); ctx.stroke();
  ctx.setLineDash([]);

  const floor = 10 ** ymin;
  const plot = (series, color) => {
    ctx.strokeStyle = ctx.fillStyle = color;
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    let started = false;
    series.forEach((v, t) => {
      if (v < floor) return;
      const [px, py] = [x(t), y(v)];
      started ? ctx.lineTo(px, py) : ctx.moveTo(px, py);
      started = true;
    });
    ctx.stroke();
    series.forEach((v, t) => {
      if (v < floor) return;
      ctx.beginPath();
      ctx.arc(x(t), y(v), 2.6, 0, 2 * Math.PI);
      ctx.fill();
    });
  };
  plot(predicted, "#4393c3");
  if (actual) plot(actual, "#d6604d");
}

function renderCoupon() {
  const population = Number($("pop").value);
  const tau = Number($("tau").value);
  $("tauLabel").textContent = tau.toFixed(1);
  if (!(population >= 2)) return;
  try {
    const span = Math.max(tau * 1.3, Math.log(population) + 3);
    const payload = JSON.parse(coupon_curve(population, span, 400));
    const p = 1 / Math.exp(population * Math.exp(-tau));
    const unseen = population * Math.exp(-tau);
    $("couponReadout").innerHTML =
      `E[T<sub>N</sub>] = ${payload.expected_over_n.toFixed(2)} N, ` +
      `&sigma; = ${payload.stddev_over_n.toFixed(2)} N; at T = ${tau.toFixed(1)} N: ` +
      `completion probability ${fmt(p, 3)}, expected unseen ${fmt(unseen, 2)}`;
    drawCoupon($("couponChart"), payload, tau);
  } catch (e) {
    $("couponReadout").textContent = `error: ${e}`;
  }
}

function drawCoupon(canvas, payload, tau) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const pad = { l: 46, r: 12, t: 12, b: 30 };
  const xmax = payload.curve[payload.curve.length - 1][0];
  const x = (t) => pad.l + (w - pad.l - pad.r) * t / xmax;
  const y = (p) => pad.t + (h - pad.t - pad.b) * (1 - p);

  ctx.strokeStyle = "#8886";
  ctx.fillStyle = "#888";
  ctx.font = "11px system-ui";
  ctx.textAlign = "right";
  for (const p of [0, 0.25, 0.5, 0.75, 1]) {
    ctx.beginPath(); ctx.moveTo(pad.l, y(p)); ctx.lineTo(w - pad.r, y(p)); ctx.stroke();
    ctx.fillText(p.toFixed(2), pad.l - 6, y(p) + 4);
  }
  ctx.textAlign = "center";
  for (let t = 0; t <= xmax; t += Math.max(1, Math.round(xmax / 15))) {
    ctx.fillText(t, x(t), h - pad.b + 16);
  }

  // expected covering time and the chosen draw count
  const marks = [[payload.expected_over_n, "#d6604d"], [tau, "#888888"]];
  for (const [where, color] of marks) {
    if (where > xmax) continue;
    ctx.strokeStyle = color;
    ctx.setLineDash([4, 4]);
    ctx.beginPath(); ctx.moveTo(x(where), pad.t); ctx.lineTo(x(where), h - pad.b); ctx.stroke();
    ctx.setLineDash([]);
  }

  ctx.strokeStyle = "#4393c3";
  ctx.lineWidth = 1.8;
  ctx.beginPath();
  payload.curve.forEach(([t, p], i) => {
    i ? ctx.lineTo(x(t), y(p)) : ctx.moveTo(x(t), y(p));
  });
  ctx.stroke();
}

await init();

for (const n of [2, 3, 4, 5]) {
  const option = document.createElement("option");
  option.value = n;
  option.textContent = `${n}x${n}x${n}`;
  $("size").appendChild(option);
}
$("size").addEventListener("change", () => { fillMetrics(); runEstimate(); });
$("metric").addEventListener("change", () => {
  $("censusBtn").disabled = !census_feasible(Number($("size").value), $("metric").value);
  runEstimate();
});
$("rmode").addEventListener("change", runEstimate);
$("run").addEventListener("click", runEstimate);
$("censusBtn").addEventListener("click", runCensus);
$("pop").addEventListener("input", renderCoupon);
$("tau").addEventListener("input", renderCoupon);

fillMetrics();
runEstimate();
renderCoupon();
