import init, { eta, bitableaux, grassmannian } from "./pkg/eta_forge_web.js";

const $ = (id) => document.getElementById(id);

function fail(target, msg) {
  target.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = msg;
  target.appendChild(p);
}

function card(text, caption) {
  const pre = document.createElement("pre");
  pre.textContent = caption ? `${caption}\n${text}` : text;
  return pre;
}

function values(form) {
  const f = new FormData(form);
  const ky = f.get("ky");
  return {
    lambda: f.get("lambda").trim(),
    m: Number(f.get("m")),
    ky: ky === null || ky === "" ? undefined : Number(ky),
  };
}

function showEta(e) {
  e?.preventDefault();
  const { lambda, m, ky } = values($("eta-form"));
  const r = JSON.parse(eta(lambda, m, ky));
  if (r.error) return fail($("eta-out"), r.error);
  $("eta-out").className = "";
  $("eta-out").textContent = `${r.label} =\n${r.text}`;
}

function showBitableaux(e) {
  e?.preventDefault();
  const { lambda, m, ky } = values($("bitab-form"));
  const r = JSON.parse(bitableaux(lambda, m, ky));
  const out = $("bitab-out");
  if (r.error) {
    $("bitab-summary").textContent = "";
    return fail(out, r.error);
  }
  $("bitab-summary").textContent = `${r.count} bitableaux of shape ${r.label}`;
  out.replaceChildren(...r.bitableaux.map((u) => card(u.text, `n = ${u.n}`)));
}

function showWords(e) {
  e?.preventDefault();
  const { lambda } = values($("words-form"));
  const r = JSON.parse(grassmannian(lambda));
  const out = $("words-out");
  if (r.error) {
    $("words-summary").textContent = "";
    return fail(out, r.error);
  }
  $("words-summary").textContent =
    `w = (${r.w}) in rank ${r.n}, length ${r.length}, ${r.words.length} reduced words`;
  out.replaceChildren(...r.words.map((x) => card(x.tableau, x.word)));
}

await init();
$("eta-form").addEventListener("submit", showEta);
$("bitab-form").addEventListener("submit", showBitableaux);
$("words-form").addEventListener("submit", showWords);
showEta();
showBitableaux();
showWords();
