"""Pure-Python twins of the compiled kernels.

These are the reference implementations of the hot inner loops (velocity
sampling rollouts, front-space ray casts, deviation-angle sweeps).  The
compiled module frozone._kernels._native mirrors them operation for
operation so both backends return bit-identical floats; the parity tests
assert exact equality.  Keep the arithmetic order in the two files in sync
when editing either one.
"""

import math

BACKEND = "pure"

TOL = 1e-9  # closed-boundary tolerance shared with frozone.geometry


def ray_gap(px, py, dx, dy, self_radius, obs_x, obs_y, obs_r, cap):
    """Free distance along a ray before hitting any disc, minus self_radius.

    (px, py) is the ray origin, (dx, dy) the unit direction.  Returns a value
    clamped to [0, cap]; cap when nothing is hit.
    """
    n = len(obs_x)
    t_hit = -1.0
    for i in range(n):
        cx = float(obs_x[i]) - px
        cy = float(obs_y[i]) - py
        r = float(obs_r[i])
        b = dx * cx + dy * cy
        disc = b * b - (cx * cx + cy * cy - r * r)
        if disc < 0.0:
            continue
        sq = math.sqrt(disc)
        t0 = b - sq
        t1 = b + sq
        if t0 >= 0.0:
            t = t0
        elif t1 >= 0.0:
            t = 0.0  # origin already inside the disc
        else:
            continue  # disc entirely behind
        if t_hit < 0.0 or t < t_hit:
            t_hit = t
    if t_hit < 0.0:
        return cap
    s = t_hit - self_radius
    if s < 0.0:
        return 0.0
    if s > cap:
        return cap
    return s


def zone_gap(kind, data, px, py):
    """Signed boundary gap of a point against an encoded zone.

    Positive outside (true distance to the zone), negative inside (depth as
    measured by the containment test), zero on the boundary.  Encodings:
    kind 0 circle [cx, cy, r]; kind 1 inflated segment [ax, ay, bx, by, infl];
    kind 2 convex CCW polygon [x0, y0, x1, y1, ...].
    """
    if kind == 0:
        ddx = px - float(data[0])
        ddy = py - float(data[1])
        return math.sqrt(ddx * ddx + ddy * ddy) - float(data[2])
    if kind == 1:
        return _segment_dist(
            px, py, float(data[0]), float(data[1]), float(data[2]), float(data[3])
        ) - float(data[4])
    # polygon: signed perpendicular distance first
    n = len(data) // 2
    m = math.inf
    for i in range(n):
        ax = float(data[2 * i])
        ay = float(data[2 * i + 1])
        j = i + 1
        if j == n:
            j = 0
        bx = float(data[2 * j])
        by = float(data[2 * j + 1])
        ex = bx - ax
        ey = by - ay
        elen = math.sqrt(ex * ex + ey * ey)
        if elen < 1e-18:
            continue
        cross = ex * (py - ay) - ey * (px - ax)
        sd = cross / elen
        if sd < m:
            m = sd
    if m >= 0.0:
        return -m
    # outside: true distance is the min distance to the edge segments
    best = math.inf
    for i in range(n):
        ax = float(data[2 * i])
        ay = float(data[2 * i + 1])
        j = i + 1
        if j == n:
            j = 0
        d = _segment_dist(px, py, ax, ay, float(data[2 * j]), float(data[2 * j + 1]))
        if d < best:
            best = d
    return best


def _segment_dist(px, py, ax, ay, bx, by):
    ex = bx - ax
    ey = by - ay
    ll = ex * ex + ey * ey
    if ll < 1e-24:
        t = 0.0
    else:
        t = ((px - ax) * ex + (py - ay) * ey) / ll
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
    qx = px - (ax + t * ex)
    qy = py - (ay + t * ey)
    return math.sqrt(qx * qx + qy * qy)


def sweep_deviation(kind, data, look_x, look_y, goal_x, goal_y, phi_max, step,
                    side, restrict=0.0, margin=TOL):
    """Grid search for the smallest-regret rotation taking the lookahead out
    of a zone.

    Candidate angles are k*step for k in [-n, n] plus the two exact +-phi_max
    endpoints.  Among angles whose rotated lookahead clears the zone, picks
    the one minimising distance to the goal, breaking ties by smaller
    magnitude and then by the preferred side (sign of `side`).  A nonzero
    `restrict` confines the winner to that sign while any such angle is
    feasible (side hysteresis for an avoidance maneuver already in progress);
    the unrestricted winner is used when that side is fully blocked.  If no
    angle clears the zone at all, falls back to the angle maximising the
    boundary gap.  Returns (angle, any_feasible).
    """
    n = int(math.floor(phi_max / step + 1e-12))
    angles = [k * step for k in range(-n, n + 1)]
    if n * step != phi_max:
        angles.append(-phi_max)
        angles.append(phi_max)

    best_phi = 0.0
    best_gd = math.inf
    any_feasible = False
    r_phi = 0.0
    r_gd = math.inf
    r_found = False
    fb_phi = 0.0
    fb_gap = -math.inf
    fb_match = -1

    for phi in angles:
        c = math.cos(phi)
        s = math.sin(phi)
        rx = c * look_x - s * look_y
        ry = s * look_x + c * look_y
        gap = zone_gap(kind, data, rx, ry)

        # fallback ranking: stay on the committed side first (the gap
        # differences are noise when the lookahead is deep inside), then
        # maximise the boundary gap
        match = 1 if restrict * phi > 0.0 else 0
        if match > fb_match or (
            match == fb_match
            and (
                gap > fb_gap
                or (
                    gap == fb_gap
                    and (
                        abs(phi) < abs(fb_phi)
                        or (abs(phi) == abs(fb_phi) and side * phi > side * fb_phi)
                    )
                )
            )
        ):
            fb_match = match
            fb_gap = gap
            fb_phi = phi

        if gap <= margin:
            continue
        gdx = goal_x - rx
        gdy = goal_y - ry
        gd = math.sqrt(gdx * gdx + gdy * gdy)
        if (
            not any_feasible
            or gd < best_gd
            or (
                gd == best_gd
                and (
                    abs(phi) < abs(best_phi)
                    or (abs(phi) == abs(best_phi) and side * phi > side * best_phi)
                )
            )
        ):
            any_feasible = True
            best_gd = gd
            best_phi = phi
        if restrict * phi > 0.0 and (
            not r_found
            or gd < r_gd
            or (gd == r_gd and abs(phi) < abs(r_phi))
        ):
            r_found = True
            r_gd = gd
            r_phi = phi

    if r_found:
        return r_phi, True
    if any_feasible:
        return best_phi, True
    return fb_phi, False


def dwa_best(
    obs_x,
    obs_y,
    obs_r,
    goal_x,
    goal_y,
    v_max,
    n_v,
    w_max,
    n_w,
    horizon,
    dt,
    min_clear,
    clear_cap,
    w_goal,
    w_clear,
    w_vel,
):
    """Evaluate the (v, w) sample grid and return the best surviving command.

    Each sample is rolled out for `horizon` seconds under unicycle motion and
    discarded if its clearance to any disc drops below the effective floor.
    The floor is min_clear, relaxed to the robot's current clearance when it
    is already closer than that: inside the margin, motion that does not make
    things worse stays admissible, so the robot can back out instead of being
    paralyzed.  Returns (v, w, clearance, score, any_feasible);
    (0, 0, -1, -inf, False) when every sample is discarded.
    """
    n_obs = len(obs_x)
    nsteps = int(math.floor(horizon / dt + 0.5))
    ox = [float(v) for v in obs_x]
    oy = [float(v) for v in obs_y]
    orad = [float(v) for v in obs_r]

    cur = clear_cap
    for i in range(n_obs):
        d = math.sqrt(ox[i] * ox[i] + oy[i] * oy[i]) - orad[i]
        if d < cur:
            cur = d
    floor = cur if cur < min_clear else min_clear

    best_v = 0.0
    best_w = 0.0
    best_clear = -1.0
    best_score = -math.inf
    found = False

    for iv in range(n_v):
        v = v_max * iv / (n_v - 1)
        for iw in range(n_w):
            w = -w_max + 2.0 * w_max * iw / (n_w - 1)
            x = 0.0
            y = 0.0
            th = 0.0
            m_clear = clear_cap if n_obs == 0 else math.inf
            for _ in range(nsteps):
                x += v * math.cos(th) * dt
                y += v * math.sin(th) * dt
                th += w * dt
                for i in range(n_obs):
                    ddx = x - ox[i]
                    ddy = y - oy[i]
                    d = math.sqrt(ddx * ddx + ddy * ddy) - orad[i]
                    if d < m_clear:
                        m_clear = d
                if m_clear < floor:
                    break
            if m_clear < floor:
                continue
            gdx = goal_x - x
            gdy = goal_y - y
            gn = math.sqrt(gdx * gdx + gdy * gdy)
            if gn < 1e-12:
                align = 1.0
            else:
                align = (math.cos(th) * gdx + math.sin(th) * gdy) / gn
            cl = m_clear if m_clear < clear_cap else clear_cap
            score = w_goal * align + w_clear * (cl / clear_cap) + w_vel * (v / v_max)
            if not found or score > best_score:
                found = True
                best_score = score
                best_v = v
                best_w = w
                best_clear = m_clear
    return best_v, best_w, best_clear, best_score, found
