/* tslint:disable */
/* eslint-disable */

/**
 * Row-major (α outer, γ inner) concurrence and discord on a `steps × steps`
 * grid over [0, 1]².
 */
export class Surfaces {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly concurrence: Float64Array;
    readonly discord: Float64Array;
    readonly steps: number;
}

export function esdCurve(channel: string, state: string, q: number, n: number): Float64Array;

export function point(channel: string, state: string, q: number, alpha: number, gamma: number): string;

export function surfaces(channel: string, state: string, q: number, steps: number): Surfaces;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_surfaces_free: (a: number, b: number) => void;
    readonly esdCurve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly point: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly surfaces: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly surfaces_concurrence: (a: number) => [number, number];
    readonly surfaces_discord: (a: number) => [number, number];
    readonly surfaces_steps: (a: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
