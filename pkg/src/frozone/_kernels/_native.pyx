# Compiled twins of frozone._kernels.pure.
#
# Every function mirrors its pure-Python counterpart operation for operation
# (same arithmetic order, same comparisons) so both backends return
# bit-identical floats.  Keep the two files in sync when editing either one.

from libc.math cimport cos, sin, sqrt, fabs, floor, INFINITY

BACKEND = "native"

TOL = 1e-9

cdef double _TOL = 1e-9


def ray_gap(double px, double py, double dx, double dy, double self_radius,
            obs_x, obs_y, obs_r, double cap):
    """Free distance along a ray before hitting any disc, minus self_radius."""
    cdef double[::1] ox = obs_x
    cdef double[::1] oy = obs_y
    cdef double[::1] orad = obs_r
    cdef Py_ssize_t i, n = ox.shape[0]
    cdef double t_hit = -1.0
    cdef double cx, cy, r, b, disc, sq, t0, t1, t, s
    for i in range(n):
        cx = ox[i] - px
        cy = oy[i] - py
        r = orad[i]
        b = dx * cx + dy * cy
        disc = b * b - (cx * cx + cy * cy - r * r)
        if disc < 0.0:
            continue
        sq = sqrt(disc)
        t0 = b - sq
        t1 = b + sq
        if t0 >= 0.0:
            t = t0
        elif t1 >= 0.0:
            t = 0.0
        else:
            continue
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


cdef double _segment_dist(double px, double py, double ax, double ay,
                          double bx, double by) nogil:
    cdef double ex = bx - ax
    cdef double ey = by - ay
    cdef double ll = ex * ex + ey * ey
    cdef double t, qx, qy
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
    return sqrt(qx * qx + qy * qy)


cdef double _zone_gap(int kind, double[::1] data, double px, double py) nogil:
    cdef Py_ssize_t i, j, n
    cdef double ddx, ddy, ax, ay, bx, by, ex, ey, elen, cross, sd, m, best, d
    if kind == 0:
        ddx = px - data[0]
        ddy = py - data[1]
        return sqrt(ddx * ddx + ddy * ddy) - data[2]
    if kind == 1:
        return _segment_dist(px, py, data[0], data[1], data[2], data[3]) - data[4]
    n = data.shape[0] // 2
    m = INFINITY
    for i in range(n):
        ax = data[2 * i]
        ay = data[2 * i + 1]
        j = i + 1
        if j == n:
            j = 0
        bx = data[2 * j]
        by = data[2 * j + 1]
        ex = bx - ax
        ey = by - ay
        elen = sqrt(ex * ex + ey * ey)
        if elen < 1e-18:
            continue
        cross = ex * (py - ay) - ey * (px - ax)
        sd = cross / elen
        if sd < m:
            m = sd
    if m >= 0.0:
        return -m
    best = INFINITY
    for i in range(n):
        ax = data[2 * i]
        ay = data[2 * i + 1]
        j = i + 1
        if j == n:
            j = 0
        d = _segment_dist(px, py, ax, ay, data[2 * j], data[2 * j + 1])
        if d < best:
            best = d
    return best


def zone_gap(int kind, data, double px, double py):
    """Signed boundary gap of a point against an encoded zone."""
    cdef double[::1] d = data
    return _zone_gap(kind, d, px, py)


def sweep_deviation(int kind, data, double look_x, double look_y,
                    double goal_x, double goal_y, double phi_max,
                    double step, double side, double restrict=0.0,
                    double margin=1e-9):
    """Grid search for the smallest-regret rotation clearing the zone."""
    cdef double[::1] zd = data
    cdef int n = <int>floor(phi_max / step + 1e-12)
    cdef int k, n_ang, idx
    cdef bint has_endpoints = (n * step != phi_max)
    n_ang = 2 * n + 1 + (2 if has_endpoints else 0)

    cdef double best_phi = 0.0
    cdef double best_gd = INFINITY
    cdef bint any_feasible = False
    cdef double r_phi = 0.0
    cdef double r_gd = INFINITY
    cdef bint r_found = False
    cdef double fb_phi = 0.0
    cdef double fb_gap = -INFINITY
    cdef int fb_match = -1
    cdef int match
    cdef double phi, c, s, rx, ry, gap, gdx, gdy, gd

    for idx in range(n_ang):
        if idx < 2 * n + 1:
            k = idx - n
            phi = k * step
        elif idx == 2 * n + 1:
            phi = -phi_max
        else:
            phi = phi_max

        c = cos(phi)
        s = sin(phi)
        rx = c * look_x - s * look_y
        ry = s * look_x + c * look_y
        gap = _zone_gap(kind, zd, rx, ry)

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
                        fabs(phi) < fabs(fb_phi)
                        or (fabs(phi) == fabs(fb_phi) and side * phi > side * fb_phi)
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
        gd = sqrt(gdx * gdx + gdy * gdy)
        if (
            not any_feasible
            or gd < best_gd
            or (
                gd == best_gd
                and (
                    fabs(phi) < fabs(best_phi)
                    or (fabs(phi) == fabs(best_phi) and side * phi > side * best_phi)
                )
            )
        ):
            any_feasible = True
            best_gd = gd
            best_phi = phi
        if restrict * phi > 0.0 and (
            not r_found
            or gd < r_gd
            or (gd == r_gd and fabs(phi) < fabs(r_phi))
        ):
            r_found = True
            r_gd = gd
            r_phi = phi

    if r_found:
        return r_phi, True
    if any_feasible:
        return best_phi, True
    return fb_phi, False


def dwa_best(obs_x, obs_y, obs_r, double goal_x, double goal_y,
             double v_max, int n_v, double w_max, int n_w,
             double horizon, double dt, double min_clear, double clear_cap,
             double w_goal, double w_clear, double w_vel):
    """Evaluate the (v, w) sample grid and return the best surviving command."""
    cdef double[::1] ox = obs_x
    cdef double[::1] oy = obs_y
    cdef double[::1] orad = obs_r
    cdef Py_ssize_t i, n_obs = ox.shape[0]
    cdef int nsteps = <int>floor(horizon / dt + 0.5)
    cdef int iv, iw, k
    cdef double v, w, x, y, th, m_clear, ddx, ddy, d
    cdef double gdx, gdy, gn, align, cl, score

    # effective clearance floor: min_clear, relaxed to the current clearance
    # when the robot is already inside the margin (see the pure twin)
    cdef double cur = clear_cap
    cdef double cfloor
    for i in range(n_obs):
        d = sqrt(ox[i] * ox[i] + oy[i] * oy[i]) - orad[i]
        if d < cur:
            cur = d
    cfloor = cur if cur < min_clear else min_clear

    cdef double best_v = 0.0
    cdef double best_w = 0.0
    cdef double best_clear = -1.0
    cdef double best_score = -INFINITY
    cdef bint found = False

    for iv in range(n_v):
        v = v_max * iv / (n_v - 1)
        for iw in range(n_w):
            w = -w_max + 2.0 * w_max * iw / (n_w - 1)
            x = 0.0
            y = 0.0
            th = 0.0
            m_clear = clear_cap if n_obs == 0 else INFINITY
            for k in range(nsteps):
                x += v * cos(th) * dt
                y += v * sin(th) * dt
                th += w * dt
                for i in range(n_obs):
                    ddx = x - ox[i]
                    ddy = y - oy[i]
                    d = sqrt(ddx * ddx + ddy * ddy) - orad[i]
                    if d < m_clear:
                        m_clear = d
                if m_clear < cfloor:
                    break
            if m_clear < cfloor:
                continue
            gdx = goal_x - x
            gdy = goal_y - y
            gn = sqrt(gdx * gdx + gdy * gdy)
            if gn < 1e-12:
                align = 1.0
            else:
                align = (cos(th) * gdx + sin(th) * gdy) / gn
            cl = m_clear if m_clear < clear_cap else clear_cap
            score = w_goal * align + w_clear * (cl / clear_cap) + w_vel * (v / v_max)
            if not found or score > best_score:
                found = True
                best_score = score
                best_v = v
                best_w = w
                best_clear = m_clear
    return best_v, best_w, best_clear, best_score, found
