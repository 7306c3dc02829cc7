/**
 * UI round-trip acceptance: drive the explorer panels headlessly over the
 * captured fixture responses (served through a mocked fetch), switch axes,
 * re-pivot three times by following the top cooccurrent (what a click
 * does), and verify that every value displayed in a panel byte-matches the
 * corresponding API response. A pivot miss must render the inline
 * not-found state.
 */
import assert from 'node:assert/strict';
import { readFileSync } from 'node:fs';
import { test } from 'node:test';
import { fileURLToPath } from 'node:url';
import { ApiClient, PivotAbsentError } from '../src/api.js';
import { renderPivotCloud, renderPivotNotFound, renderPivotTable } from '../src/cloud.js';
import { fmt12 } from '../src/format.js';
import { layoutFactorMap, renderFactorMap, renderHoverDetails } from '../src/scatter.js';
import { initialState, setKMax, setPivot, switchAxes } from '../src/state.js';
import { renderCompareTable, renderDictTable } from '../src/tables.js';
const fixturesDir = fileURLToPath(new URL('../../test/fixtures/', import.meta.url));
const RESPONSES = JSON.parse(readFileSync(fixturesDir + 'responses.json', 'utf-8'));
const mockFetch = async (url) => {
    const body = RESPONSES[url];
    if (body === undefined) {
        if (url.startsWith('/api/pivot/')) {
            return { status: 404, text: async () => '{"error":"PivotAbsent"}' };
        }
        return { status: 404, text: async () => '{"error":"NotFound"}' };
    }
    if (body.includes('"error":"PivotAbsent"')) {
        return { status: 404, text: async () => body };
    }
    return { status: 200, text: async () => body };
};
const client = new ApiClient('', mockFetch);
/** Every data-field cell in the panel must byte-match the raw response. */
function assertCellsMatchRaw(panel, raw, fields) {
    for (const field of fields) {
        const pattern = new RegExp(`data-field="${field}"[^>]*>([^<]*)<`, 'g');
        let found = 0;
        for (const match of panel.matchAll(pattern)) {
            const displayed = match[1];
            if (displayed === '') {
                continue; // explicit null on the wire
            }
            found += 1;
            assert.ok(raw.includes(`"${field}":${displayed}`)
                || raw.includes(`"${field}":"${displayed}"`), `${field} value ${displayed} not found verbatim in the response`);
        }
        assert.ok(found > 0, `no ${field} cells rendered`);
    }
}
test('rank table and dictionaries byte-match the API', async () => {
    const { data: compare, raw } = await client.compare();
    const panel = renderCompareTable(compare);
    assertCellsMatchRaw(panel, raw, ['overlap', 'rank_a', 'rank_b']);
    for (const pair of compare.pairs) {
        if (pair.lemma_a !== null) {
            assert.ok(panel.includes(`>${pair.lemma_a}<`));
            assert.ok(raw.includes(`"lemma_a":"${pair.lemma_a}"`));
        }
    }
    assert.ok(panel.includes('data-field="overlap">18<'));
    for (const side of ['a', 'b']) {
        const { data: dict, raw: dictRaw } = await client.dict(side, 20);
        const dictPanel = renderDictTable(dict);
        assertCellsMatchRaw(dictPanel, dictRaw, ['rank', 'count', 'relative_freq_per_10k', 'total_filtered_tokens']);
        assert.equal(dict.entries.length, 20);
    }
});
test('factor map: axis switch preserves zoom and values stay verbatim', async () => {
    let state = initialState();
    const zoomed = { scale: 2.5, tx: 10, ty: -4 };
    const seen = [];
    for (const axes of [[1, 2], [2, 3]]) {
        const { data, raw } = await client.ca('a', axes);
        seen.push(data);
        state = setKMax(state, 'a', data.k_max);
        state = switchAxes(state, axes);
        assert.deepEqual(state.axes, axes);
        const svg = renderFactorMap(data, zoomed, 'fr-x-syn');
        // every point is always rendered; culling only affects labels
        assert.equal((svg.match(/class="map-point"/g) ?? []).length, data.points.length);
        assert.ok(svg.includes(`translate(${zoomed.tx} ${zoomed.ty}) scale(${zoomed.scale})`));
        // axis captions carry the exact inertia percentages from the response
        for (const pct of data.axis_inertia_pct) {
            const text = fmt12(pct);
            assert.ok(svg.includes(`(${text}%)`));
            assert.ok(raw.includes(text));
        }
        // hover panel values are the response values, byte for byte
        const hovered = data.points[7].lemma;
        const hover = renderHoverDetails(data, hovered);
        assertCellsMatchRaw(hover, raw, ['mass', 'ctr_x', 'ctr_y', 'cos2_sum']);
        // tooltip numbers equal the canonical rendering of the parsed values
        for (const point of data.points.slice(0, 25)) {
            for (const value of [point.x, point.y, point.ctr_x, point.cos2_sum]) {
                assert.ok(raw.includes(fmt12(value)));
            }
        }
    }
    // same solution listed under both axis pairs, different projections
    assert.equal(seen[0].points.length, seen[1].points.length);
    assert.notDeepEqual(seen[0].points[0], seen[1].points[0]);
});
test('a 300-point payload renders all points at any zoom', () => {
    const points = Array.from({ length: 300 }, (_, i) => ({
        lemma: `w${i}`,
        x: Math.cos(i * 0.7) * (1 + (i % 13)),
        y: Math.sin(i * 1.3) * (1 + (i % 7)),
        ctr_x: (i % 97) / 97,
        ctr_y: (i % 89) / 89,
        cos2_sum: 0.5,
        mass: 1 / 300,
        cluster: i % 4,
    }));
    const payload = {
        side: 'a', axes: [1, 2], k_max: 5,
        axis_inertia_pct: [6.1, 3.2], inertia_pct: [6.1, 3.2], points,
    };
    for (const scale of [0.5, 1, 8]) {
        const placed = layoutFactorMap(payload, scale);
        assert.equal(placed.length, 300);
        const svg = renderFactorMap(payload, { scale, tx: 0, ty: 0 }, 'x');
        assert.equal((svg.match(/class="map-point"/g) ?? []).length, 300);
        const labelled = placed.filter((p) => p.labelled).length;
        assert.ok(labelled > 0 && labelled <= 300);
    }
});
test('re-pivoting three times keeps panels verbatim with the API', async () => {
    const chain = JSON.parse(RESPONSES['__pivot_chain__']);
    assert.equal(chain.length, 4); // start + three hops
    assert.equal(new Set(chain).size, 4); // all distinct
    let state = initialState();
    for (const [hop, word] of chain.entries()) {
        const { data, raw } = await client.pivot('a', word, 2);
        state = setPivot(state, 'a', word);
        const cloud = renderPivotCloud(data, 'fr-x-syn');
        const table = renderPivotTable(data, 12);
        assert.ok(cloud.includes(`>${data.context_count}</tspan>`));
        assert.ok(raw.includes(`"context_count":${data.context_count}`));
        assertCellsMatchRaw(table, raw, ['k', 'F', 'z']);
        // the click target for the next hop is rendered and carries data-lemma
        if (hop < 3) {
            const next = chain[hop + 1];
            assert.ok(cloud.includes(`data-lemma="${next}"`)
                || table.includes(`data-lemma="${next}"`));
        }
        // displayed z equals the canonical rendering of the parsed value
        for (const entry of data.entries.slice(0, 12)) {
            assert.ok(table.includes(`>${fmt12(entry.z)}<`));
        }
    }
    assert.deepEqual(state.pivotHistory.a, chain);
    assert.equal(state.pivot.a, chain[3]);
});
test('pivot 404 renders the inline not-found state', async () => {
    let caught = null;
    try {
        await client.pivot('a', 'zzz-missing', 2);
    }
    catch (error) {
        caught = error;
    }
    assert.ok(caught instanceof PivotAbsentError);
    const panel = renderPivotNotFound('zzz-missing');
    assert.ok(panel.includes('word not found in sub-corpus'));
    assert.ok(panel.includes('zzz-missing'));
    assert.ok(panel.includes('pivot-missing'));
});
