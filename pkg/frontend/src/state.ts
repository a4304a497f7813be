/**
 * Viewer session state: which scene is loaded, which mode is active,
 * what is selected, which nodes sit in the seed basket. Mode toggles and
 * camera motion never touch the scene document; everything analytical in
 * it came from the service.
 */

import type { SceneDocument } from './sceneDoc.js';

export type ViewerMode = 'default_viewer' | 'first_person';

export class ViewerState {
  mode: ViewerMode = 'default_viewer';
  scene: SceneDocument | null = null;
  selection: number | null = null;
  seedBasket = new Set<number>();
  sessionId: string | null = null;

  nodeIds(): Set<number> {
    return new Set(this.scene?.nodes.map((n) => n.id) ?? []);
  }

  labelOf(id: number): string | null {
    return this.scene?.nodes.find((n) => n.id === id)?.label ?? null;
  }

  loadScene(doc: SceneDocument): void {
    this.scene = doc;
    const ids = this.nodeIds();
    if (this.selection !== null && !ids.has(this.selection)) {
      this.selection = null;
    }
    for (const id of [...this.seedBasket]) {
      if (!ids.has(id)) this.seedBasket.delete(id);
    }
  }

  toggleMode(): ViewerMode {
    this.mode = this.mode === 'default_viewer' ? 'first_person' : 'default_viewer';
    return this.mode;
  }

  select(id: number | null): void {
    if (id !== null && !this.nodeIds().has(id)) {
      throw new Error(`selection ${id} is not in the scene`);
    }
    this.selection = id;
  }

  toggleSeed(id: number): boolean {
    if (!this.nodeIds().has(id)) {
      throw new Error(`seed ${id} is not in the scene`);
    }
    if (this.seedBasket.has(id)) {
      this.seedBasket.delete(id);
      return false;
    }
    this.seedBasket.add(id);
    return true;
  }

  seedLabels(): string[] {
    const labels: string[] = [];
    for (const id of [...this.seedBasket].sort((a, b) => a - b)) {
      const label = this.labelOf(id);
      if (label !== null) labels.push(label);
    }
    return labels;
  }
}
