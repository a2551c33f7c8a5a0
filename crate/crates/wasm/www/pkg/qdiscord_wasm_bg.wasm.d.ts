/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_surfaces_free: (a: number, b: number) => void;
export const esdCurve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const point: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
export const surfaces: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const surfaces_concurrence: (a: number) => [number, number];
export const surfaces_discord: (a: number) => [number, number];
export const surfaces_steps: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
