// DOM shell: renders a ViewState snapshot into the page and routes
// clicks back into the controller. The stage shows the served SVG
// with move badges (or arc color targets in coloring mode) layered
// into it; the side panel shows structure, invariants, puzzle score,
// and coloring status.

import { layoutBadges } from "./badges.js";
import { ServiceClient } from "./client.js";
import {
  PlaygroundController,
  sameSite,
  type Mode,
  type ViewState,
} from "./controller.js";
import type { CatalogEntry } from "./wire.js";

export const ARC_PALETTE = ["#bf616a", "#ebcb8b", "#5e81ac"] as const;

const SVG_NS = "http://www.w3.org/2000/svg";
const MODES: Mode[] = ["explore", "puzzle", "coloring"];

export class PlaygroundApp {
  readonly controller: PlaygroundController;
  private entries: CatalogEntry[] = [];
  private paletteColor = 0;
  private header!: HTMLElement;
  private stage!: HTMLElement;
  private panel!: HTMLElement;
  private banner!: HTMLElement;
  private toast!: HTMLElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: ServiceClient,
  ) {
    this.controller = new PlaygroundController(client, (state) =>
      this.render(state),
    );
    this.buildShell();
  }

  /** Fetch the catalog, fill the pickers, and load the first entry. */
  async start(initial = "trefoil"): Promise<void> {
    this.entries = (await this.client.catalog()).entries;
    this.renderHeader(this.controller.state);
    await this.controller.loadView(initial);
  }

  private buildShell(): void {
    this.root.textContent = "";
    this.root.className = "playground";
    this.header = document.createElement("header");
    const main = document.createElement("main");
    this.stage = document.createElement("section");
    this.stage.className = "stage";
    this.panel = document.createElement("aside");
    this.panel.className = "panel";
    main.append(this.stage, this.panel);
    this.banner = document.createElement("div");
    this.banner.className = "banner";
    this.toast = document.createElement("div");
    this.toast.className = "toast";
    this.toast.addEventListener("click", () => this.controller.dismissToast());
    this.root.append(this.header, main, this.banner, this.toast);
  }

  render(state: ViewState): void {
    this.renderHeader(state);
    this.renderStage(state);
    this.renderPanel(state);
    this.banner.textContent = state.banner ?? "";
    this.banner.classList.toggle("show", state.banner !== null);
    this.toast.textContent = state.toast
      ? `[${state.toast.code}] ${state.toast.message}`
      : "";
    this.toast.classList.toggle("show", state.toast !== null);
  }

  private renderHeader(state: ViewState): void {
    this.header.textContent = "";
    const title = document.createElement("h1");
    title.textContent = "Knot playground";
    this.header.appendChild(title);

    const tabs = document.createElement("nav");
    tabs.className = "modes";
    for (const mode of MODES) {
      const tab = document.createElement("button");
      tab.textContent = mode;
      tab.dataset.mode = mode;
      tab.className = state.mode === mode ? "tab active" : "tab";
      tab.disabled = mode === "puzzle" && state.session === null;
      tab.addEventListener("click", () => this.controller.setMode(mode));
      tabs.appendChild(tab);
    }
    this.header.appendChild(tabs);

    const picker = document.createElement("select");
    picker.id = "catalog-picker";
    for (const entry of this.entries) {
      const option = document.createElement("option");
      option.value = entry.name;
      option.textContent = entry.name;
      option.selected = entry.name === state.source;
      picker.appendChild(option);
    }
    picker.addEventListener("change", () => {
      void this.controller.loadView(picker.value);
    });
    this.header.appendChild(picker);

    this.header.appendChild(this.buildPuzzleForm());
  }

  private buildPuzzleForm(): HTMLFormElement {
    const form = document.createElement("form");
    form.id = "puzzle-form";
    const base = document.createElement("select");
    base.name = "base";
    for (const entry of this.entries) {
      const option = document.createElement("option");
      option.value = entry.name;
      option.textContent = entry.name;
      base.appendChild(option);
    }
    const moves = document.createElement("input");
    moves.name = "moves";
    moves.type = "number";
    moves.min = "0";
    moves.value = "5";
    const seed = document.createElement("input");
    seed.name = "seed";
    seed.type = "number";
    seed.value = "42";
    const go = document.createElement("button");
    go.type = "submit";
    go.textContent = "Scramble";
    form.append(base, moves, seed, go);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.controller.newPuzzle(
        base.value,
        Number(moves.value),
        Number(seed.value),
      );
    });
    return form;
  }

  private renderStage(state: ViewState): void {
    this.stage.innerHTML = state.svg;
    const svg = this.stage.querySelector("svg");
    if (!svg) return;
    svg.setAttribute("width", "100%");
    svg.removeAttribute("height");
    if (state.mode === "coloring") {
      this.decorateArcs(svg, state);
    } else {
      this.decorateBadges(svg, state);
    }
  }

  private decorateBadges(svg: SVGSVGElement, state: ViewState): void {
    const [x0, y0, x1, y1] = state.layout.bbox;
    const diag = Math.hypot(x1 - x0, y1 - y0) || 1;
    const r = 0.035 * diag;
    layoutBadges(state.sites, state.layout).forEach((badge, index) => {
      const group = document.createElementNS(SVG_NS, "g");
      group.setAttribute("class", "badge");
      group.dataset.siteIndex = String(index);
      group.dataset.kind = badge.site.kind;
      group.dataset.direction = badge.site.direction;
      if (state.hintSite && sameSite(badge.site, state.hintSite)) {
        group.classList.add("hinted");
      }
      // layout is y-up; the served SVG is y-down
      group.setAttribute(
        "transform",
        `translate(${badge.x.toFixed(4)} ${(-badge.y).toFixed(4)})`,
      );
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("r", r.toFixed(4));
      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("font-size", (r * 0.9).toFixed(4));
      text.setAttribute("text-anchor", "middle");
      text.setAttribute("dy", "0.35em");
      text.textContent = badge.label;
      group.append(circle, text);
      group.addEventListener("click", () => {
        void this.controller.clickSite(badge.site);
      });
      svg.appendChild(group);
    });
  }

  private decorateArcs(svg: SVGSVGElement, state: ViewState): void {
    const [x0, y0, x1, y1] = state.layout.bbox;
    const diag = Math.hypot(x1 - x0, y1 - y0) || 1;
    for (const path of Array.from(svg.querySelectorAll("path[data-arc]"))) {
      const arc = Number(path.getAttribute("data-arc"));
      const color = state.colors[arc];
      if (color !== undefined) {
        path.setAttribute("stroke", ARC_PALETTE[color] ?? "currentColor");
      }
      // wide invisible twin so thin strands are easy to hit
      const hit = path.cloneNode(false) as SVGPathElement;
      hit.removeAttribute("data-arc");
      hit.dataset.arcHit = String(arc);
      hit.setAttribute("stroke", "transparent");
      hit.setAttribute("stroke-width", (0.04 * diag).toFixed(4));
      hit.setAttribute("class", "arc-hit");
      const pick = () => {
        void this.controller.setArcColor(arc, this.paletteColor);
      };
      hit.addEventListener("click", pick);
      path.addEventListener("click", pick);
      svg.appendChild(hit);
    }
    if (state.coloringStatus.state === "violations") {
      for (const crossing of state.coloringStatus.crossings) {
        const position = state.layout.positions[crossing];
        if (!position) continue;
        const pulse = document.createElementNS(SVG_NS, "circle");
        pulse.setAttribute("class", "violation");
        pulse.dataset.crossing = String(crossing);
        pulse.setAttribute("cx", position[0].toFixed(4));
        pulse.setAttribute("cy", (-position[1]).toFixed(4));
        pulse.setAttribute("r", (0.05 * diag).toFixed(4));
        svg.appendChild(pulse);
      }
    }
  }

  private renderPanel(state: ViewState): void {
    this.panel.textContent = "";
    this.panel.appendChild(this.structureBlock(state));
    this.panel.appendChild(this.invariantsBlock(state));
    if (state.mode === "puzzle" && state.session) {
      this.panel.appendChild(this.puzzleBlock(state));
    }
    if (state.mode === "coloring") {
      this.panel.appendChild(this.coloringBlock(state));
    }
  }

  private block(title: string, className: string): HTMLElement {
    const section = document.createElement("section");
    section.className = `block ${className}`;
    const heading = document.createElement("h2");
    heading.textContent = title;
    section.appendChild(heading);
    return section;
  }

  private row(section: HTMLElement, label: string, value: string, key?: string) {
    const div = document.createElement("div");
    div.className = "row";
    if (key) div.dataset.field = key;
    const dt = document.createElement("span");
    dt.className = "label";
    dt.textContent = label;
    const dd = document.createElement("span");
    dd.className = "value";
    dd.textContent = value;
    div.append(dt, dd);
    section.appendChild(div);
  }

  private structureBlock(state: ViewState): HTMLElement {
    const section = this.block("Structure", "structure");
    const report = state.report;
    if (!report) return section;
    this.row(section, "crossings", String(report.crossing_count), "crossings");
    this.row(section, "components", String(report.component_count), "components");
    this.row(section, "arcs", String(report.arc_count), "arcs");
    this.row(section, "faces", String(report.faces), "faces");
    return section;
  }

  private invariantsBlock(state: ViewState): HTMLElement {
    const section = this.block("Invariants", "invariants");
    const inv = state.invariants;
    if (!inv) return section;
    const writhe = inv.writhe > 0 ? `+${inv.writhe}` : String(inv.writhe);
    this.row(section, "writhe", writhe, "writhe");
    this.row(
      section,
      "tricolorings",
      `${inv.tricolor.count} (${inv.tricolor.tricolorable ? "tricolorable" : "not tricolorable"})`,
      "tricolor",
    );
    for (const [a, b, lk] of inv.linking) {
      this.row(
        section,
        `lk(${a},${b})`,
        lk > 0 ? `+${lk}` : String(lk),
        `lk-${a}-${b}`,
      );
    }
    if (inv.jones) {
      this.row(section, "Jones", inv.jones.text, "jones");
    } else if (inv.budget_exceeded) {
      this.row(section, "Jones", "(over the crossing budget)", "jones");
    }
    return section;
  }

  private puzzleBlock(state: ViewState): HTMLElement {
    const section = this.block("Puzzle", "puzzle");
    const session = state.session!;
    this.row(
      section,
      "moves",
      `${session.score.moves_used} / par ${session.score.par}`,
      "score",
    );
    if (session.puzzle.move_budget !== null) {
      this.row(section, "budget", String(session.puzzle.move_budget), "budget");
    }
    this.row(section, "target", `${session.puzzle.target_crossings} crossings`, "target");
    const hint = document.createElement("button");
    hint.id = "hint-button";
    hint.textContent = "Hint";
    hint.addEventListener("click", () => {
      void this.controller.requestHint();
    });
    const reset = document.createElement("button");
    reset.id = "reset-button";
    reset.textContent = "Reset";
    reset.addEventListener("click", () => {
      void this.controller.resetPuzzle();
    });
    const actions = document.createElement("div");
    actions.className = "actions";
    actions.append(hint, reset);
    section.appendChild(actions);
    return section;
  }

  private coloringBlock(state: ViewState): HTMLElement {
    const section = this.block("Tricoloring", "coloring");
    const palette = document.createElement("div");
    palette.className = "palette";
    ARC_PALETTE.forEach((hex, color) => {
      const swatch = document.createElement("button");
      swatch.className =
        color === this.paletteColor ? "swatch selected" : "swatch";
      swatch.dataset.color = String(color);
      swatch.style.background = hex;
      swatch.title = `color ${color}`;
      swatch.addEventListener("click", () => {
        this.paletteColor = color;
        this.render(this.controller.state);
      });
      palette.appendChild(swatch);
    });
    section.appendChild(palette);
    const status = document.createElement("p");
    status.className = "coloring-status";
    status.dataset.state = state.coloringStatus.state;
    status.textContent = this.coloringMessage(state);
    section.appendChild(status);
    return section;
  }

  private coloringMessage(state: ViewState): string {
    const st = state.coloringStatus;
    switch (st.state) {
      case "idle":
        return "";
      case "incomplete":
        return `Color every arc (${st.missing} left). Pick a color, then click an arc.`;
      case "checking":
        return "Checking...";
      case "success":
        return "Valid tricoloring!";
      case "monochromatic":
        return "Valid, but it uses only one color. Try using all three.";
      case "violations":
        return `Rule broken at ${st.crossings.length} crossing${st.crossings.length === 1 ? "" : "s"}: each crossing needs one or three colors.`;
    }
  }
}
