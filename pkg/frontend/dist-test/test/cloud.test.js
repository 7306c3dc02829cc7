import assert from 'node:assert/strict';
import { readFileSync } from 'node:fs';
import { test } from 'node:test';
import { fileURLToPath } from 'node:url';
import { CLOUD_HEIGHT, CLOUD_WIDTH, cloudFontSize, layoutCloud, lemmaAngle, renderPivotCloud, } from '../src/cloud.js';
const fixturesDir = fileURLToPath(new URL('../../test/fixtures/', import.meta.url));
function pivotPayload() {
    const responses = JSON.parse(readFileSync(fixturesDir + 'responses.json', 'utf-8'));
    return JSON.parse(responses['/api/pivot/a?word=na005&min=2']);
}
test('spiral start angles match the report renderer rule', () => {
    const cases = JSON.parse(readFileSync(fixturesDir + 'angle_cases.json', 'utf-8'));
    for (const { lemma, theta0 } of cases) {
        assert.ok(Math.abs(lemmaAngle(lemma) - theta0) < 1e-12, lemma);
    }
});
test('font size is linear in the index and clipped at the maximum', () => {
    assert.equal(cloudFontSize(0, 10), 10);
    assert.equal(cloudFontSize(5, 10), 22);
    assert.equal(cloudFontSize(10, 10), 34);
    assert.equal(cloudFontSize(25, 10), 34); // clipped at z_max
    assert.equal(cloudFontSize(-3, 10), 10); // negative indices floor
    assert.equal(cloudFontSize(7, 0), 10); // degenerate max
});
test('font sizes are ordered like the indices', () => {
    const payload = pivotPayload();
    const zMax = Math.max(...payload.entries.map((e) => Math.max(0, e.z)));
    const sizes = payload.entries.map((e) => cloudFontSize(Math.max(0, e.z), zMax));
    for (let i = 1; i < sizes.length; i++) {
        // entries arrive sorted by z descending
        assert.ok(sizes[i] <= sizes[i - 1] + 1e-12);
    }
});
test('layout is deterministic and free of overlaps', () => {
    const entries = pivotPayload().entries.map((e) => ({
        lemma: e.lemma,
        weight: Math.max(0, e.z),
    }));
    const first = layoutCloud(entries);
    const second = layoutCloud([...entries].reverse());
    assert.deepEqual(first, second); // input order is irrelevant
    assert.ok(first.length > 10);
    for (const term of first) {
        assert.ok(term.x >= 0 && term.x <= CLOUD_WIDTH);
        assert.ok(term.y >= 0 && term.y <= CLOUD_HEIGHT);
    }
    for (let i = 0; i < first.length; i++) {
        for (let j = i + 1; j < first.length; j++) {
            const a = first[i];
            const b = first[j];
            const aw = (0.62 * a.font * [...a.lemma].length + 4) / 2;
            const bw = (0.62 * b.font * [...b.lemma].length + 4) / 2;
            const ah = (1.1 * a.font + 2) / 2;
            const bh = (1.1 * b.font + 2) / 2;
            const apart = Math.abs(a.x - b.x) > aw + bw || Math.abs(a.y - b.y) > ah + bh;
            assert.ok(apart, `${a.lemma} overlaps ${b.lemma}`);
        }
    }
});
test('cloud svg carries clickable terms with the pivot in the title', () => {
    const payload = pivotPayload();
    const svg = renderPivotCloud(payload, 'fr-x-syn');
    assert.ok(svg.includes('class="pivot-cloud"'));
    assert.ok(svg.includes(`data-lemma="${payload.entries[0].lemma}"`));
    assert.ok(svg.includes('na005'));
    assert.ok(svg.includes(`>${payload.context_count}</tspan>`));
});
