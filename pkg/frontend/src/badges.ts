// Badge placement for move sites. Each enumerated site becomes one
// clickable badge anchored at its locus centroid: reduce/slide loci
// are crossing indices, grow loci are edge labels, and a free-loop
// grow site (empty locus) anchors to the first free loop. Sites that
// share an anchor are fanned out in a ring so every badge stays
// individually clickable.

import type { LayoutWire, MoveSite, Point } from "./wire.js";

export interface Badge {
  site: MoveSite;
  x: number;
  y: number;
  label: string;
}

const FAN_STEP = 0.055; // of the bbox diagonal, per ring slot

function centroid(points: Point[]): Point {
  let sx = 0;
  let sy = 0;
  for (const [x, y] of points) {
    sx += x;
    sy += y;
  }
  return [sx / points.length, sy / points.length];
}

function routeMidpoint(route: Point[]): Point {
  return route[Math.floor(route.length / 2)] ?? [0, 0];
}

export function siteAnchor(site: MoveSite, layout: LayoutWire): Point {
  if (site.direction === "grow") {
    if (site.locus.length === 0) {
      const loop = layout.free_loop_routes[0];
      return loop ? centroid(loop) : [0, 0];
    }
    return centroid(
      site.locus.map((edge) => routeMidpoint(layout.edge_routes[String(edge)] ?? [])),
    );
  }
  return centroid(site.locus.map((ci) => layout.positions[ci] ?? [0, 0]));
}

export function badgeLabel(site: MoveSite): string {
  const mark =
    site.direction === "reduce" ? "-" : site.direction === "grow" ? "+" : "~";
  return site.kind + mark;
}

export function layoutBadges(sites: MoveSite[], layout: LayoutWire): Badge[] {
  const [x0, y0, x1, y1] = layout.bbox;
  const diag = Math.hypot(x1 - x0, y1 - y0) || 1;
  const groups = new Map<string, { anchor: Point; members: MoveSite[] }>();
  for (const site of sites) {
    const anchor = siteAnchor(site, layout);
    const key = `${anchor[0].toFixed(4)},${anchor[1].toFixed(4)}`;
    const group = groups.get(key);
    if (group) {
      group.members.push(site);
    } else {
      groups.set(key, { anchor, members: [site] });
    }
  }
  const badges: Badge[] = [];
  for (const { anchor, members } of groups.values()) {
    if (members.length === 1) {
      const site = members[0]!;
      badges.push({ site, x: anchor[0], y: anchor[1], label: badgeLabel(site) });
      continue;
    }
    const radius = FAN_STEP * diag * (1 + members.length / 8);
    members.forEach((site, i) => {
      const angle = (2 * Math.PI * i) / members.length;
      badges.push({
        site,
        x: anchor[0] + radius * Math.cos(angle),
        y: anchor[1] + radius * Math.sin(angle),
        label: badgeLabel(site),
      });
    });
  }
  return badges;
}
