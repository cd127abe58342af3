#pragma once

#define BOLTCHEB_VERSION "0.1.0"
