/**
 * Client view state and its transitions. The invariant maintained here is
 * that the active axis pair always stays within each side's retained axes;
 * zoom/pan transforms survive axis switches so the analyst does not lose
 * their place in the cloud.
 */
export const IDENTITY = { scale: 1, tx: 0, ty: 0 };
export function initialState() {
    return {
        axes: [1, 2],
        kMax: { a: 0, b: 0 },
        transform: { a: { ...IDENTITY }, b: { ...IDENTITY } },
        pivot: { a: null, b: null },
        pivotHistory: { a: [], b: [] },
        hovered: null,
    };
}
export function setKMax(state, side, kMax) {
    const next = { ...state, kMax: { ...state.kMax, [side]: kMax } };
    return { ...next, axes: clampAxes(next.axes, next.kMax) };
}
export function clampAxes(axes, kMax) {
    const limit = Math.max(1, Math.min(...Object.values(kMax).filter((k) => k > 0)));
    const clamp = (ax) => Math.min(Math.max(1, ax), limit);
    return [clamp(axes[0]), clamp(axes[1])];
}
/** Switch axes, preserving each side's zoom/pan transform. */
export function switchAxes(state, axes) {
    return { ...state, axes: clampAxes(axes, state.kMax) };
}
export function setTransform(state, side, transform) {
    return { ...state, transform: { ...state.transform, [side]: transform } };
}
/**
 * Make a word the side's pivot; re-pivoting on a cooccurrent appends to the
 * breadcrumb history (duplicates collapse onto their latest position).
 */
export function setPivot(state, side, word) {
    const history = state.pivotHistory[side].filter((w) => w !== word);
    history.push(word);
    return {
        ...state,
        pivot: { ...state.pivot, [side]: word },
        pivotHistory: { ...state.pivotHistory, [side]: history },
    };
}
export function setHovered(state, lemma) {
    return { ...state, hovered: lemma };
}
