/**
 * Application glue: fetches API payloads, renders panels, and wires the
 * analyst's interactive loop (axis switching, pan/zoom, hover details,
 * pivot input and click-to-repivot with a breadcrumb history).
 */

import { ApiClient, CaResponse, PivotAbsentError, Side } from './api.js';
import { renderPivotCloud, renderPivotNotFound, renderPivotTable } from './cloud.js';
import { renderFactorMap, renderHoverDetails } from './scatter.js';
import {
  ViewState,
  initialState,
  setHovered,
  setKMax,
  setPivot,
  setTransform,
  switchAxes,
} from './state.js';
import { renderBreadcrumb, renderCompareTable, renderDictTable } from './tables.js';

const SIDES: Side[] = ['a', 'b'];

class ExplorerApp {
  private state: ViewState = initialState();
  private ca: Record<Side, CaResponse | null> = { a: null, b: null };
  private languages: Record<Side, string> = { a: 'a', b: 'b' };
  private minJoint = 2;

  constructor(private readonly api: ApiClient, private readonly root: Document) {}

  private el(id: string): HTMLElement {
    const node = this.root.getElementById(id);
    if (!node) {
      throw new Error(`missing element #${id}`);
    }
    return node;
  }

  async boot(): Promise<void> {
    const { data: meta } = await this.api.meta();
    this.languages = meta.languages;
    this.minJoint = meta.parameters.min_joint ?? 2;
    this.el('title-line').textContent =
      `${meta.languages.a} vs ${meta.languages.b} — k=${meta.parameters.k}`;

    const { data: compare } = await this.api.compare();
    this.el('compare-panel').innerHTML = renderCompareTable(compare);

    for (const side of SIDES) {
      const { data: dict } = await this.api.dict(side, meta.parameters.k);
      this.el(`dict-${side}`).innerHTML = renderDictTable(dict);
    }

    await this.loadMaps();

    const pivots = meta.parameters.pivots ?? [];
    if (pivots.length > 0) {
      await this.repivot('a', pivots[0][0]);
      await this.repivot('b', pivots[0][1]);
    }
    this.wireEvents();
  }

  private async loadMaps(): Promise<void> {
    for (const side of SIDES) {
      try {
        const { data } = await this.api.ca(side, this.state.axes);
        this.ca[side] = data;
        this.state = setKMax(this.state, side, data.k_max);
      } catch {
        this.ca[side] = null;
      }
      this.renderMap(side);
    }
    const [x, y] = this.state.axes;
    (this.el('axis-x') as HTMLInputElement).value = String(x);
    (this.el('axis-y') as HTMLInputElement).value = String(y);
  }

  private renderMap(side: Side): void {
    this.el(`map-${side}`).innerHTML = renderFactorMap(
      this.ca[side], this.state.transform[side], this.languages[side]);
    this.el(`hover-${side}`).innerHTML = renderHoverDetails(
      this.ca[side], this.state.hovered);
  }

  private async applyAxes(axX: number, axY: number): Promise<void> {
    this.state = switchAxes(this.state, [axX, axY]);
    for (const side of SIDES) {
      if (this.ca[side] === null) {
        continue;
      }
      const { data } = await this.api.ca(side, this.state.axes);
      this.ca[side] = data;
      this.renderMap(side);        // transform untouched: zoom/pan preserved
    }
  }

  private async repivot(side: Side, word: string): Promise<void> {
    const panel = this.el(`cloud-${side}`);
    const input = this.el(`pivot-input-${side}`) as HTMLInputElement;
    input.value = word;
    try {
      const { data } = await this.api.pivot(side, word, this.minJoint);
      this.state = setPivot(this.state, side, word);
      panel.innerHTML = renderPivotCloud(data, this.languages[side])
        + renderPivotTable(data);
    } catch (error) {
      if (error instanceof PivotAbsentError) {
        panel.innerHTML = renderPivotNotFound(word);
      } else {
        throw error;
      }
    }
    this.el(`history-${side}`).innerHTML =
      renderBreadcrumb(this.state.pivotHistory[side]);
  }

  private wireEvents(): void {
    this.el('axis-form').addEventListener('submit', (event) => {
      event.preventDefault();
      const axX = parseInt((this.el('axis-x') as HTMLInputElement).value, 10);
      const axY = parseInt((this.el('axis-y') as HTMLInputElement).value, 10);
      if (Number.isFinite(axX) && Number.isFinite(axY)) {
        void this.applyAxes(axX, axY);
      }
    });

    for (const side of SIDES) {
      const form = this.el(`pivot-form-${side}`);
      form.addEventListener('submit', (event) => {
        event.preventDefault();
        const word = (this.el(`pivot-input-${side}`) as HTMLInputElement).value.trim();
        if (word) {
          void this.repivot(side, word);
        }
      });
      // click-to-repivot: cloud terms, table rows and breadcrumb entries
      for (const container of [`cloud-${side}`, `history-${side}`]) {
        this.el(container).addEventListener('click', (event) => {
          const target = (event.target as Element).closest('[data-lemma]');
          if (target) {
            event.preventDefault();
            void this.repivot(side, target.getAttribute('data-lemma') ?? '');
          }
        });
      }
      // clicking a dictionary lemma also pivots on it
      this.el(`dict-${side}`).addEventListener('click', (event) => {
        const cell = (event.target as Element).closest('.lemma-cell');
        if (cell) {
          void this.repivot(side, cell.getAttribute('data-lemma') ?? '');
        }
      });
      this.wireMapInteraction(side);
    }
  }

  private wireMapInteraction(side: Side): void {
    const holder = this.el(`map-${side}`);
    let dragging = false;
    let lastX = 0;
    let lastY = 0;

    holder.addEventListener('wheel', (event) => {
      event.preventDefault();
      const current = this.state.transform[side];
      const factor = (event as WheelEvent).deltaY < 0 ? 1.2 : 1 / 1.2;
      const scale = Math.min(Math.max(current.scale * factor, 0.5), 16);
      this.state = setTransform(this.state, side, { ...current, scale });
      this.renderMap(side);
    }, { passive: false });

    holder.addEventListener('pointerdown', (event) => {
      dragging = true;
      lastX = (event as PointerEvent).clientX;
      lastY = (event as PointerEvent).clientY;
    });
    holder.addEventListener('pointermove', (event) => {
      const pointer = event as PointerEvent;
      if (dragging) {
        const current = this.state.transform[side];
        this.state = setTransform(this.state, side, {
          scale: current.scale,
          tx: current.tx + (pointer.clientX - lastX),
          ty: current.ty + (pointer.clientY - lastY),
        });
        lastX = pointer.clientX;
        lastY = pointer.clientY;
        this.renderMap(side);
      } else {
        const target = (pointer.target as Element).closest('.map-point');
        const lemma = target?.getAttribute('data-lemma') ?? null;
        if (lemma !== this.state.hovered) {
          this.state = setHovered(this.state, lemma);
          this.el(`hover-${side}`).innerHTML =
            renderHoverDetails(this.ca[side], lemma);
        }
      }
    });
    holder.addEventListener('pointerup', () => {
      dragging = false;
    });
  }
}

export function start(api: ApiClient = new ApiClient('')): ExplorerApp {
  const app = new ExplorerApp(api, document);
  void app.boot();
  return app;
}

if (typeof document !== 'undefined' && document.getElementById('explorer-root')) {
  start();
}
